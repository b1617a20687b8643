#include "cyclespec/bessel.hpp"

#include <cstdlib>

namespace cyclespec {

namespace {

void check_argument(const Real& t) {
  if (!t.is_finite()) throw DomainError("Bessel argument must be finite");
  if (t.sign() < 0) throw DomainError("Bessel argument must be non-negative");
}

}  // namespace

BesselEval bessel_i(long nu, const Real& t, Precision prec) {
  check_argument(t);
  const long v = std::labs(nu);
  if (t.is_zero()) {
    return {nu, t, Real(v == 0 ? 1L : 0L, prec), Real(prec)};
  }
  const Precision work = prec + 32;
  const Real half_t = ldexp(t.with_precision(work), -1);
  const Real x = half_t * half_t;

  Real power = pow(half_t, v);
  Integer k_fact = 1;
  Integer nk_fact;
  mpz_fac_ui(nk_fact.get_mpz_t(), static_cast<unsigned long>(v));

  Real sum(work);
  const Real cutoff = exp2i(-prec - 8, work);
  const Real one(1L, work);
  for (long k = 0;; ++k) {
    const Real term = power / Real(Integer(k_fact * nk_fact), work);
    const Real ratio = x / Real((k + 1) * (v + k + 1), work);
    if (term < cutoff * (sum + one) && ratio < one) {
      Real tail = term / (one - ratio) + ldexp(sum, static_cast<long>(-prec));
      return {nu, t, sum.with_precision(prec), tail.with_precision(prec)};
    }
    sum += term;
    power *= x;
    k_fact *= k + 1;
    nk_fact *= v + k + 1;
  }
}

Real bessel_image_tail(long m, long ell, const Real& t, long K) {
  check_argument(t);
  const Precision p = 64;
  if (t.is_zero()) return Real(p);
  const long nu0 = (K + 1) * m - ell;
  const Real half_t = ldexp(t.with_precision(p), -1);
  Real g = Real(1L, p);
  for (long j = 1; j <= nu0; ++j) g *= half_t / Real(j, p);
  Real rho = half_t / Real(nu0 + 1, p);
  const Real one(1L, p);
  if (!(rho < one)) {
    Real inf(p);
    mpfr_set_inf(inf.get(), 1);
    return inf;
  }
  const Real bound = ldexp(g, 1) / (one - rho);
  return bound + ldexp(bound, -40);
}

long bessel_tail_index(long m, long ell, const Real& t, const Real& eps) {
  if (m < 2) throw DomainError("bessel_tail_index requires m >= 2");
  if (ell < 0 || ell >= m) throw DomainError("bessel_tail_index requires 0 <= ell < m");
  if (eps.sign() <= 0) throw DomainError("bessel_tail_index requires eps > 0");
  long K = 0;
  while (!(bessel_image_tail(m, ell, t, K) < eps)) ++K;
  return K;
}

}  // namespace cyclespec
