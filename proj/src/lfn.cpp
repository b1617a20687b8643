#include "cyclespec/lfn.hpp"

#include "cyclespec/chebyshev.hpp"
#include "cyclespec/trigsums.hpp"

namespace cyclespec {

const char* to_string(LRoute route) {
  switch (route) {
    case LRoute::direct: return "direct";
    case LRoute::gauss_recurrence: return "gauss_recurrence";
    case LRoute::polynomial: return "polynomial";
    case LRoute::derivative: return "derivative";
    case LRoute::finite_difference: return "finite_difference";
    case LRoute::chebyshev: return "chebyshev";
  }
  return "?";
}

namespace {

CNum round_to(const CNum& z, Precision p) {
  return CNum(z.re().with_precision(p), z.im().with_precision(p));
}

void check_n(long n) {
  if (n < 1) throw DomainError("L-value order n must be >= 1");
}

void require_primitive(const DirichletCharacter& chi, const char* what) {
  if (!chi.is_primitive()) {
    throw DomainError(std::string(what) + " requires a primitive character (conductor " +
                      std::to_string(chi.conductor()) + " < modulus " +
                      std::to_string(chi.modulus()) + ")");
  }
}

LValue make(const DirichletCharacter& chi, long n, const CNum& value, LRoute route,
            const Real& budget, Precision p) {
  return {chi.modulus(), chi.index(), n, round_to(value, p), route, budget.with_precision(p), false};
}

LValue vanishing(const DirichletCharacter& chi, long n, LRoute route, Precision p) {
  return {chi.modulus(), chi.index(), n, CNum(p), route, Real(p), true};
}

Real budget_for(const Real& scale, Precision p) { return exp2i(24 - p, p) * (scale + Real(1L, p)); }

// P(a + b r) as a polynomial in r.
Poly compose_linear(const Poly& poly, const Rational& a, const Rational& b) {
  const Poly lin({a, b});
  Poly out;
  for (long k = poly.degree(); k >= 0; --k) out = out * lin + Poly::constant(poly.coeff(k));
  return out;
}

// sum_r conj chi(r) v(r) over units r.
template <class F>
CNum conj_twisted(const DirichletCharacter& chi, Precision w, F&& v) {
  CNum sum(w);
  for (long r = 1; r < chi.modulus(); ++r) {
    const auto q = chi.value_exponent(r);
    if (q) sum += unit_root(-*q, w) * v(r);
  }
  return sum;
}

CNum conj_gauss(const DirichletCharacter& chi, Precision w) { return gauss_sum(chi, w).conj(); }

std::vector<Rational> series_quotient(const Poly& num, const Poly& den, long count) {
  std::vector<Rational> out;
  const Rational d0 = den.coeff(0);
  for (long k = 0; k < count; ++k) {
    Rational acc = num.coeff(k);
    for (long j = 1; j <= k; ++j) acc -= den.coeff(j) * out[k - j];
    out.push_back(acc / d0);
  }
  return out;
}

}  // namespace

LValue l_direct(const DirichletCharacter& chi, long n, Precision prec) {
  check_n(n);
  if (!chi.is_even()) return vanishing(chi, n, LRoute::direct, prec);
  const long m = chi.modulus();
  const Precision w = prec + 32;
  CNum sum(w);
  Real mass(w);
  for (long j = 1; j < m; ++j) {
    const auto q = chi.value_exponent(j);
    if (!q) continue;
    const Real term = pow(Real(1L, w) / sin_pi(Rational(Integer(j), Integer(m)), w), 2 * n);
    sum += unit_root(*q, w) * term;
    mass += term;
  }
  return make(chi, n, sum, LRoute::direct, budget_for(mass, prec), prec);
}

LValue l_via_gauss(const DirichletCharacter& chi, long n, Precision prec) {
  check_n(n);
  if (!chi.is_even()) throw DomainError("l_via_gauss requires an even character");
  require_primitive(chi, "l_via_gauss");
  const long m = chi.modulus();
  const Precision w = prec + 32;
  CNum acc = conj_twisted(chi, w, [&](long r) {
    return CNum(Real(recurrence_unshifted(m, r, n)[static_cast<std::size_t>(n - 1)], w));
  });
  Rational factor = pow(Rational(2), static_cast<unsigned long>(n)) * Rational(m);
  if (n % 2 == 0) factor = -factor;
  const CNum value = acc * Real(factor, w) / conj_gauss(chi, w);
  return make(chi, n, value, LRoute::gauss_recurrence, budget_for(value.abs(), prec), prec);
}

Poly l_polynomial_in_r(long m, long n) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  check_n(n);
  const Rational a1 = shifted_t_coeff(m, 1);
  std::vector<Poly> c;
  for (long k = 0; k < n; ++k) {
    const Poly u = shifted_u_poly(k + 1);
    Poly rhs = compose_linear(u, Rational(m), Rational(-1)) + u -
               Poly::constant(shifted_t_or_zero(m, k + 2) / Rational(m));
    for (long j = 1; j <= k; ++j) rhs = rhs - c[k - j] * shifted_t_or_zero(m, j + 1);
    c.push_back(rhs * (Rational(1) / a1));
  }
  return c.back() * Rational(m);
}

LValue l_polynomial(const DirichletCharacter& chi, long n, Precision prec, PolyForm form) {
  check_n(n);
  if (!chi.is_even()) throw DomainError("l_polynomial requires an even character");
  require_primitive(chi, "l_polynomial");
  const long m = chi.modulus();
  const Precision w = prec + 32;
  if (form == PolyForm::automatic) form = n <= 2 ? PolyForm::displayed : PolyForm::symbolic;
  if (form == PolyForm::displayed && n > 2) {
    throw DomainError("closed polynomial forms exist only for n = 1, 2");
  }
  CNum value(w);
  if (form == PolyForm::displayed && n == 1) {
    value = conj_twisted(chi, w, [&](long r) { return CNum(Real(Integer((r - m) * r), w)); });
    value = value * Real(2L, w) / conj_gauss(chi, w);
  } else if (form == PolyForm::displayed) {
    value = conj_twisted(chi, w, [&](long r) {
      return CNum(Real(Integer(r - 2 * m) * Integer(r - m) * Integer(r) * Integer(r + m), w));
    });
    value = -(value * Real(Rational(2, 3), w)) / conj_gauss(chi, w);
  } else {
    const Poly poly = l_polynomial_in_r(m, n);
    value = conj_twisted(chi, w, [&](long r) { return CNum(Real(poly.eval_exact(Rational(r)), w)); });
    Rational factor = pow(Rational(2), static_cast<unsigned long>(n));
    if (n % 2 == 0) factor = -factor;
    value = value * Real(factor, w) / conj_gauss(chi, w);
  }
  return make(chi, n, value, LRoute::polynomial, budget_for(value.abs(), prec), prec);
}

namespace {

LValue l_tilde_direct(const DirichletCharacter& chi, long n, Precision prec) {
  const long m = chi.modulus();
  const Precision w = prec + 32;
  CNum sum(w);
  Real mass(w);
  for (long j = 1; j < m; ++j) {
    const auto q = chi.value_exponent(j);
    if (!q) continue;
    const Rational x{Integer(j), Integer(m)};
    const Real s = sin_pi(x, w);
    const Real term = pow(Real(1L, w) / s, 2 * n) * cos_pi(x, w) / s;
    sum += unit_root(*q, w) * term;
    mass += abs(term);
  }
  return make(chi, n, sum, LRoute::direct, budget_for(mass, prec), prec);
}

// d_{m,r}(k), k = 0..count-1: Taylor coefficients of
// [U_{l-1}(s+1) - (l/m)(U_{m-l-1}(s+1) + U_{l-1}(s+1))] / (T_m(s+1) - 1).
std::vector<Rational> beta_derivative_coeffs(long m, long ell, long count) {
  const Poly low = cheb_u(ell - 1).taylor_shift(Rational(1));
  const Poly high = cheb_u(m - ell - 1).taylor_shift(Rational(1));
  Poly num = low - (high + low) * Rational(Integer(ell), Integer(m));
  Poly den = cheb_t(m).taylor_shift(Rational(1)) - Poly::constant(Rational(1));
  num = num.divide_linear(Rational());
  den = den.divide_linear(Rational());
  return series_quotient(num, den, count);
}

LValue l_tilde_derivative(const DirichletCharacter& chi, long n, Precision prec) {
  const long m = chi.modulus();
  const Precision w = prec + 32;
  CNum acc(w);
  for (long r = 1; r < m; ++r) {
    const auto q = chi.value_exponent(r);
    if (!q) continue;
    const Rational d = beta_derivative_coeffs(m, r, n)[static_cast<std::size_t>(n - 1)];
    acc += unit_root(*q, w) * Real(d, w);
  }
  // conj L~(n) = (-1)^n 2^n i m^2 / (n tau(chi)) sum_r chi(r) d_{m,r}(n-1)
  Rational factor = pow(Rational(2), static_cast<unsigned long>(n)) * Rational(m * m) / Rational(n);
  if (n % 2 == 1) factor = -factor;
  const CNum i_unit(Real(w), Real(1L, w));
  const CNum conj_value = i_unit * acc * Real(factor, w) / gauss_sum(chi, w);
  return make(chi, n, conj_value.conj(), LRoute::derivative, budget_for(conj_value.abs(), prec), prec);
}

// (m / tau(chi)) sum_r chi(r) C_{m,r}(beta, n) from the closed-form sums.
CNum twisted_closed(const DirichletCharacter& chi, const Rational& beta, long n, Precision w) {
  const long m = chi.modulus();
  CNum acc(w);
  for (long r = 1; r < m; ++r) {
    const auto q = chi.value_exponent(r);
    if (!q) continue;
    acc += unit_root(*q, w) *
           coeffs_from_generating_function(m, r, beta, n, w)[static_cast<std::size_t>(n - 1)].value;
  }
  return acc * Real(m, w) / gauss_sum(chi, w);
}

LValue l_tilde_finite_difference(const DirichletCharacter& chi, long n, Precision prec) {
  const long m = chi.modulus();
  const long h_log = 24;
  const Precision w = prec + 2 * n * (h_log + 8) + 64;
  const Rational h{Integer(1), Integer(Integer(1) << h_log)};
  const CNum f1 = twisted_closed(chi, h, n, w);
  const CNum fm1 = twisted_closed(chi, -h, n, w);
  const CNum f2 = twisted_closed(chi, Rational(2) * h, n, w);
  const CNum fm2 = twisted_closed(chi, Rational(-2) * h, n, w);
  const CNum deriv = (fm2 - f2 + (f1 - fm1) * Real(8L, w)) / Real(Rational(12) * h, w);
  // d/dbeta L(n, chi, beta) at 0 = -(2 n pi / m) conj L~(n)
  const CNum conj_value = -(deriv * Real(m, w)) / (Real(2 * n, w) * pi(w));
  const Real err = exp2i(-4 * h_log + 8, prec) * (conj_value.abs().with_precision(prec) + Real(1L, prec));
  return make(chi, n, conj_value.conj(), LRoute::finite_difference, err, prec);
}

}  // namespace

LValue l_tilde(const DirichletCharacter& chi, long n, Precision prec, LRoute route) {
  check_n(n);
  if (chi.is_even()) return vanishing(chi, n, route, prec);
  switch (route) {
    case LRoute::direct:
      return l_tilde_direct(chi, n, prec);
    case LRoute::derivative:
      require_primitive(chi, "derivative route for L~");
      return l_tilde_derivative(chi, n, prec);
    case LRoute::finite_difference:
      require_primitive(chi, "finite-difference route for L~");
      return l_tilde_finite_difference(chi, n, prec);
    default:
      throw DomainError(std::string("route ") + to_string(route) + " does not apply to L~");
  }
}

LValue l_hat(const DirichletCharacter& chi, long n, Precision prec, LRoute route) {
  check_n(n);
  const long m = chi.modulus();
  if (m % 4 == 0) throw DomainError("hat L requires m not divisible by 4");
  const Precision w = prec + 32;
  if (route == LRoute::direct) {
    CNum sum(w);
    Real mass(w);
    for (long j = 0; j < m; ++j) {
      const auto q = chi.value_exponent(j);
      if (!q) continue;
      const Real term = pow(Real(1L, w) / cos_pi(Rational(Integer(2 * j), Integer(m)), w), n);
      sum += unit_root(*q, w) * term;
      mass += abs(term);
    }
    return make(chi, n, sum, LRoute::direct, budget_for(mass, prec), prec);
  }
  if (route != LRoute::chebyshev) {
    throw DomainError(std::string("route ") + to_string(route) + " does not apply to hat L");
  }
  require_primitive(chi, "Chebyshev route for hat L");
  const Poly den = cheb_t(m) - Poly::constant(Rational(1));
  CNum acc(w);
  for (long r = 1; r < m; ++r) {
    const auto q = chi.value_exponent(r);
    if (!q) continue;
    const std::vector<Rational> c = series_quotient(cheb_u(m - r - 1) + cheb_u(r - 1), den, n);
    acc += unit_root(-*q, w) * Real(c[static_cast<std::size_t>(n - 1)], w);
  }
  const CNum tau_conj_chi = gauss_sum(chi.conj(), w);
  const CNum value = -(acc * Real(m, w)) / tau_conj_chi;
  return make(chi, n, value, LRoute::chebyshev, budget_for(value.abs(), prec), prec);
}

}  // namespace cyclespec
