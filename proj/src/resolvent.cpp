#include "cyclespec/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "cyclespec/chebyshev.hpp"
#include "cyclespec/heat.hpp"

namespace cyclespec {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

void check_m(long m) {
  if (m < 2) throw DomainError("resolvent requires m >= 2");
}

Real abs_eps(Precision p) { return exp2i(48 - p, p); }

CNum cnum_from(const Real& re) { return CNum(re); }

}  // namespace

ResolventClosedForm resolvent_closed_form(long m, const Rational& beta, long r, Precision prec) {
  check_m(m);
  const long ell = mod(r, m);
  return {m,
          ell,
          beta,
          cheb_u(m - ell - 1),
          cheb_u(ell - 1),
          cheb_t(m),
          cnum_from(cos_pi(Rational(2) * beta, prec)),
          unit_root(-beta * Rational(ell) / Rational(m), prec)};
}

CNum resolvent_spectral(long m, const Rational& beta, long r, const CNum& s, ResolventNorm norm,
                        bool exclude_zero_mode) {
  check_m(m);
  const Precision p = s.precision();
  const Precision w = p + 16;
  const CNum sw(s.re().with_precision(w), s.im().with_precision(w));
  const Real eps = abs_eps(p);
  const std::vector<Real> lambda = cycle_eigenvalues(m, beta, w);
  CNum sum(w);
  for (long j = exclude_zero_mode ? 1 : 0; j < m; ++j) {
    const CNum den = sw + CNum(lambda[j]);
    if (den.abs() < eps) {
      throw PoleError("s is at the resolvent pole -2 sin^2(pi (j+beta)/m) for j = " + std::to_string(j), j);
    }
    const Rational phase = norm == ResolventNorm::kernel
                               ? (Rational(j) + beta) * Rational(r) / Rational(m)
                               : Rational(j) * Rational(r) / Rational(m);
    sum += unit_root(phase, w) / den;
  }
  sum /= Real(m, w);
  return CNum(sum.re().with_precision(p), sum.im().with_precision(p));
}

CNum resolvent_closed(long m, const Rational& beta, long r, const CNum& s, ResolventNorm norm) {
  check_m(m);
  const Precision p = s.precision();
  const Precision w = p + m + 32;
  const ResolventClosedForm form = resolvent_closed_form(m, beta, r, w);
  const CNum z = CNum(s.re().with_precision(w), s.im().with_precision(w)) + CNum(Real(1L, w));
  const CNum den = form.denominator.eval(z) - form.cos_term;
  if (den.abs() < abs_eps(p)) {
    throw DomainError("T_m(s+1) - cos 2 pi beta vanishes: s is a resolvent pole");
  }
  CNum num = form.numerator_u_high.eval(z) + unit_root(beta, w) * form.numerator_u_low.eval(z);
  CNum value = form.prefactor * num / den;
  if (norm == ResolventNorm::kernel) value *= unit_root(beta * Rational(r) / Rational(m), w);
  return CNum(value.re().with_precision(p), value.im().with_precision(p));
}

CNum resolvent_hyperbolic(long m, const Rational& beta, long r, const CNum& s, ResolventNorm norm) {
  check_m(m);
  if (!(s.re().sign() > 0)) throw DomainError("hyperbolic resolvent form requires Re(s) > 0");
  const Precision p = s.precision();
  const Precision w = p + 32;
  const long ell = mod(r, m);
  const CNum sw(s.re().with_precision(w), s.im().with_precision(w));
  const CNum one(Real(1L, w));
  const CNum two(Real(2L, w));
  const CNum acs = acosh(sw + one);
  const CNum root = sqrt(sw * sw + two * sw);
  const CNum num = sinh(CNum(Real(m - ell, w)) * acs) +
                   unit_root(beta, w) * sinh(CNum(Real(ell, w)) * acs);
  const CNum den = cosh(CNum(Real(m, w)) * acs) - CNum(cos_pi(Rational(2) * beta, w));
  if (den.abs() < abs_eps(p)) throw DomainError("cosh(m acosh(s+1)) - cos 2 pi beta vanishes");
  const Rational phase = norm == ResolventNorm::kernel
                             ? -beta * Rational(ell - r) / Rational(m)
                             : -beta * Rational(ell) / Rational(m);
  CNum value = unit_root(phase, w) * num / (root * den);
  return CNum(value.re().with_precision(p), value.im().with_precision(p));
}

Rational RationalFn::eval_exact(const Rational& s) const {
  const Rational d = denominator.eval_exact(s);
  if (d.is_zero()) throw DomainError("rational function has a pole at this point");
  return numerator.eval_exact(s) / d;
}

CNum RationalFn::eval(const CNum& s) const {
  const Precision p = s.precision();
  const Precision w = p + 2 * static_cast<Precision>(std::max<long>(denominator.degree(), 1)) + 32;
  const CNum sw(s.re().with_precision(w), s.im().with_precision(w));
  CNum v = numerator.eval(sw) / denominator.eval(sw);
  return CNum(v.re().with_precision(p), v.im().with_precision(p));
}

std::vector<Rational> RationalFn::taylor(std::size_t count) const {
  const Rational d0 = denominator.coeff(0);
  if (d0.is_zero()) throw DomainError("rational function is singular at s = 0");
  std::vector<Rational> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = numerator.coeff(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational dk = denominator.coeff(k);
      if (!dk.is_zero()) acc -= dk * out[n - k];
    }
    out[n] = acc / d0;
  }
  return out;
}

RationalFn resolvent_rational(long m, long r) {
  check_m(m);
  const long ell = mod(r, m);
  const Poly u_high = cheb_u(m - ell - 1).taylor_shift(Rational(1));
  const Poly u_low = cheb_u(ell - 1).taylor_shift(Rational(1));
  const Poly t_minus_one = cheb_t(m).taylor_shift(Rational(1)) - Poly::constant(Rational(1));
  const Poly ms = Poly::monomial(Rational(m), 1);
  Poly num = ms * (u_high + u_low) - t_minus_one;
  Poly den = ms * t_minus_one;
  while (!num.is_zero() && num.coeff(0).is_zero() && den.coeff(0).is_zero()) {
    num = num.divide_linear(Rational());
    den = den.divide_linear(Rational());
  }
  return {std::move(num), std::move(den)};
}

std::vector<ResolventPole> resolvent_poles(long m, const Rational& beta, Precision prec) {
  check_m(m);
  std::vector<long> group(static_cast<std::size_t>(m), -1);
  std::vector<ResolventPole> out;
  for (long j = 0; j < m; ++j) {
    if (group[j] >= 0) continue;
    group[j] = static_cast<long>(out.size());
    ResolventPole pole{-(Real(1L, prec) - cos_pi(Rational(2) * (Rational(j) + beta) / Rational(m), prec)),
                       {j}};
    for (long k = j + 1; k < m; ++k) {
      if (group[k] < 0 && ((Rational(j + k) + Rational(2) * beta) / Rational(m)).is_integer()) {
        group[k] = group[j];
        pole.indices.push_back(k);
      }
    }
    out.push_back(std::move(pole));
  }
  std::sort(out.begin(), out.end(),
            [](const ResolventPole& a, const ResolventPole& b) { return a.value < b.value; });
  return out;
}

const GaussRule& gauss_legendre(int points, Precision prec) {
  static std::mutex mu;
  static std::map<std::pair<int, Precision>, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{points, prec}];
  if (slot) return *slot;

  auto rule = std::make_unique<GaussRule>();
  const Precision w = prec + 16;
  const Real one(1L, w);
  const Real stop = exp2i(-prec - 4, w);
  for (int i = 1; i <= points; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (points + 0.5)), w);
    Real dp(w);
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = one;
      Real p1 = x;
      for (int k = 2; k <= points; ++k) {
        Real p2 = (Real(2L * k - 1, w) * x * p1 - Real(static_cast<long>(k - 1), w) * p0) /
                  Real(static_cast<long>(k), w);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = Real(static_cast<long>(points), w) * (x * p1 - p0) / (x * x - one);
      const Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < stop) break;
    }
    const Real weight = Real(2L, w) / ((one - x * x) * dp * dp);
    rule->nodes.push_back(x.with_precision(prec));
    rule->weights.push_back(weight.with_precision(prec));
  }
  slot = std::move(rule);
  return *slot;
}

namespace {

using Integrand = std::function<CNum(const Real&)>;

CNum gauss_panel(const Integrand& f, const Real& a, const Real& b, const GaussRule& rule) {
  const Real half = ldexp(b - a, -1);
  const Real mid = ldexp(a + b, -1);
  CNum sum(a.precision());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += f(mid + half * rule.nodes[i]) * rule.weights[i];
  }
  return sum * half;
}

void adaptive(const Integrand& f, const Real& a, const Real& b, const CNum& whole, const Real& tol,
              const GaussRule& rule, int depth, CNum& acc, Real& err) {
  const Real mid = ldexp(a + b, -1);
  const CNum left = gauss_panel(f, a, mid, rule);
  const CNum right = gauss_panel(f, mid, b, rule);
  const CNum refined = left + right;
  const Real diff = (refined - whole).abs();
  if (diff <= tol || depth >= 40) {
    acc += refined;
    err += diff;
    return;
  }
  const Real half_tol = ldexp(tol, -1);
  adaptive(f, a, mid, left, half_tol, rule, depth + 1, acc, err);
  adaptive(f, mid, b, right, half_tol, rule, depth + 1, acc, err);
}

}  // namespace

LaplaceResult resolvent_from_laplace(long m, const Rational& beta, long x, long y, const CNum& s,
                                     const Real& horizon) {
  check_m(m);
  if (!(s.re().sign() > 0)) throw DomainError("Laplace transform requires Re(s) > 0");
  if (!(horizon.sign() > 0)) throw DomainError("Laplace horizon must be positive");
  const Precision p = s.precision();
  const Precision w = p + 16;
  const long d = x - y;
  const std::vector<Real> lambda = cycle_eigenvalues(m, beta, w);
  std::vector<CNum> rates;
  std::vector<CNum> phases;
  const CNum sw(s.re().with_precision(w), s.im().with_precision(w));
  for (long j = 0; j < m; ++j) {
    rates.push_back(-(sw + CNum(lambda[j])));
    phases.push_back(unit_root((Rational(j) + beta) * Rational(d) / Rational(m), w) / Real(m, w));
  }
  const Integrand f = [&](const Real& t) {
    CNum sum(w);
    for (long j = 0; j < m; ++j) sum += phases[j] * exp(rates[j] * t);
    return sum;
  };

  const GaussRule& rule = gauss_legendre(20, w);
  const Real T = horizon.with_precision(w);
  const long panels = std::max(1L, static_cast<long>(std::ceil(T.to_double())));
  const Real width = T / Real(panels, w);
  const Real tol = exp2i(40 - p, w) / Real(panels, w);
  CNum acc(w);
  Real err(w);
  for (long k = 0; k < panels; ++k) {
    const Real a = width * Real(k, w);
    const Real b = k + 1 == panels ? T : width * Real(k + 1, w);
    adaptive(f, a, b, gauss_panel(f, a, b, rule), tol, rule, 0, acc, err);
  }
  const Real re_s = s.re().with_precision(w);
  const Real tail = exp(-(re_s * T)) / re_s;
  return {CNum(acc.re().with_precision(p), acc.im().with_precision(p)), err.with_precision(p),
          tail.with_precision(p)};
}

}  // namespace cyclespec
