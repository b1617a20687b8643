#include "doctest.h"
#include "support.hpp"

#include "cyclespec/chebyshev.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

namespace {
Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }
}

TEST_SUITE("chebyshev") {

TEST_CASE("low-degree polynomials") {
  CHECK(cheb_t(3) == Poly({q(0), q(-3), q(0), q(4)}));
  CHECK(cheb_u(2) == Poly({q(-1), q(0), q(4)}));
  CHECK(cheb_u(-1).is_zero());
  CHECK(cheb_t(0) == Poly::constant(q(1)));
  CHECK(cheb_u(4).eval_exact(q(1)) == q(5));
  CHECK(cheb_t(9).eval_exact(q(1)) == q(1));
  CHECK(cheb_t(9).eval_exact(q(-1)) == q(-1));
}

TEST_CASE("shifted and monomial coefficients") {
  CHECK(shifted_t_coeff(5, 1) == q(25));
  CHECK(shifted_t_coeff(7, 0) == q(1));
  CHECK(shifted_u_coeff(4, 0) == q(5));
  CHECK(shifted_u_coeff(2, 2) == q(4));
  CHECK(monomial_t_coeff(3, 1) == q(-3));
  CHECK(monomial_u_coeff(3, 1) == q(-4));
  CHECK(monomial_t_coeff(4, 0) == q(1));
  CHECK(monomial_t_coeff(5, 2) == q(0));
  CHECK(monomial_t_or_zero(3, 7) == q(0));
  CHECK(shifted_u_or_zero(2, -1) == q(0));
}

TEST_CASE("T_7(cos x) = cos 7x") {
  const Real x = dec("0.3");
  const CNum c(cos(x));
  CHECK(delta(cheb_t(7).eval(c), CNum(cos(x * Real(7L, kP)))) < two_pow(-118));
}

TEST_CASE("property: closed-form coefficients match the recurrence polynomials") {
  for (long n = 0; n <= 30; ++n) {
    const Poly ts = cheb_t(n).taylor_shift(q(1));
    const Poly us = cheb_u(n).taylor_shift(q(1));
    for (long k = 0; k <= n; ++k) {
      CHECK(monomial_t_coeff(n, k) == cheb_t(n).coeff(k));
      CHECK(monomial_u_coeff(n, k) == cheb_u(n).coeff(k));
      CHECK(shifted_t_coeff(n, k) == ts.coeff(k));
      CHECK(shifted_u_coeff(n, k) == us.coeff(k));
    }
  }
}

TEST_CASE("property: shifted_u_poly and shifted_t_poly interpolate the coefficients") {
  for (long k = 0; k <= 6; ++k) {
    const Poly bu = shifted_u_poly(k);
    const Poly at = shifted_t_poly(k);
    for (long x = 0; x <= 20; ++x) {
      CHECK(bu.eval_exact(q(x)) == shifted_u_or_zero(x - 1, k));
      CHECK(at.eval_exact(q(x)) == shifted_t_or_zero(x, k));
    }
  }
}

TEST_CASE("property: Pell identity T_n^2 - (z^2 - 1) U_{n-1}^2 = 1") {
  const Poly z2m1 = poly_z() * poly_z() - Poly::constant(q(1));
  for (long n = 1; n <= 20; ++n) {
    CHECK(cheb_t(n) * cheb_t(n) - z2m1 * cheb_u(n - 1) * cheb_u(n - 1) == Poly::constant(q(1)));
  }
}

}
