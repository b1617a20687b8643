#pragma once

#include "cyclespec/poly.hpp"

namespace cyclespec {

/// T_n by the three-term recurrence. References stay valid for the process lifetime.
const Poly& cheb_t(long n);
/// U_n by the three-term recurrence, with U_{-1} = 0.
const Poly& cheb_u(long n);

/// a_n(k): coefficient of (z-1)^k in T_n(z).
Rational shifted_t_coeff(long n, long k);
/// b_n(k): coefficient of (z-1)^k in U_n(z).
Rational shifted_u_coeff(long n, long k);

/// t_n(j): coefficient of z^j in T_n(z). Requires 0 <= j <= n.
Rational monomial_t_coeff(long n, long j);
/// u_n(j): coefficient of z^j in U_n(z). Requires 0 <= j <= n (any j for n = -1).
Rational monomial_u_coeff(long n, long j);

/// Same as the shifted/monomial coefficients but zero for j outside [0, n].
Rational shifted_t_or_zero(long n, long k);
Rational shifted_u_or_zero(long n, long k);
Rational monomial_t_or_zero(long n, long j);
Rational monomial_u_or_zero(long n, long j);

/// b_{x-1}(k) as a polynomial in x: (x/k!) prod_{j=1}^{k} (x^2 - j^2)/(2j+1).
/// Agrees with shifted_u_coeff(x-1, k) for every integer x >= 0.
Poly shifted_u_poly(long k);
/// a_x(k) as a polynomial in x; agrees with shifted_t_coeff(x, k) for every x >= 0.
Poly shifted_t_poly(long k);

}  // namespace cyclespec
