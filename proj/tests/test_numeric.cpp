#include "doctest.h"
#include "support.hpp"

#include "cyclespec/numeric.hpp"
#include "cyclespec/poly.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

TEST_SUITE("numeric") {

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("0.3") == Rational(Integer(3), Integer(10)));
  CHECK(Rational::parse("-1.25e-3") == Rational(Integer(-1), Integer(800)));
  CHECK(Rational::parse("6/4") == Rational(Integer(3), Integer(2)));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational::parse("-7/3").floor() == -3);
  CHECK(Rational::parse("-7/3").frac() == Rational(Integer(2), Integer(3)));
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rendering") {
  CHECK(Real(Rational(Integer(1), Integer(3)), 53).str(10) == "0.3333333333");
  CHECK(Real(1000000L, kP).str(8) == "1000000");
  CHECK(Real(Rational(Integer(-1), Integer(4)), kP).str(5) == "-0.25");
  CHECK(Real(kP).str(5) == "0");
  CHECK(display_digits(128) == 33);
  CHECK(display_digits(53) == 11);
  CHECK(CNum(Real(1L, kP), Real(-2L, kP)).str(5) == "1-2i");
}

TEST_CASE("sin_pi and cos_pi are exact at rational special points") {
  CHECK(sin_pi(Rational(1), kP).is_zero());
  CHECK(sin_pi(Rational(1000001), kP).is_zero());
  CHECK(cos_pi(Rational(Integer(1), Integer(2)), kP).is_zero());
  CHECK(cos_pi(Rational(Integer(7), Integer(2)), kP).is_zero());
  CHECK(sin_pi(Rational(Integer(1), Integer(2)), kP) == Real(1L, kP));
  CHECK(cos_pi(Rational(3), kP) == Real(-1L, kP));
  const Real half_root3 = sqrt(Real(3L, kP)) / Real(2L, kP);
  CHECK(abs(sin_pi(Rational(Integer(1), Integer(3)), kP) - half_root3) < two_pow(-125));
  CHECK(abs(cos_pi(Rational(Integer(-2), Integer(3)), kP) + Real(Rational(Integer(1), Integer(2)), kP)) <
        two_pow(-125));
}

TEST_CASE("unit roots") {
  const CNum w = unit_root(Rational(Integer(1), Integer(4)), kP);
  CHECK(w.re().is_zero());
  CHECK(w.im() == Real(1L, kP));
  CHECK(delta(pow(unit_root(Rational(Integer(1), Integer(7)), kP), 7), "1", "0") < two_pow(-120));
}

TEST_CASE("tolerance policy") {
  const Tolerance t = Tolerance::for_precision(128);
  CHECK(t.abs_eps == two_pow(-80));
  CHECK(t.rel_eps == two_pow(-80));
  CHECK(t.bound(Real(1L, kP), Real(3L, kP)) == two_pow(-80) * Real(4L, kP));
  CHECK(approx_eq(Real(1L, kP), Real(1L, kP) + two_pow(-90), t));
  CHECK_FALSE(approx_eq(Real(1L, kP), Real(1L, kP) + two_pow(-70), t));
  const Tolerance loose = Tolerance::from_log2(-10, -20, kP);
  CHECK(loose.abs_eps == two_pow(-10));
}

TEST_CASE("division by a tiny complex number is a domain error") {
  CNum one(Real(1L, kP), Real(kP));
  CHECK_THROWS_AS(one / CNum(Real(kP), Real(kP)), DomainError);
  CHECK_THROWS_AS(rational_to_cnum(Rational(1), 20), DomainError);
}

TEST_CASE("property: sin^2 + cos^2 = 1 on random rationals") {
  Lcg g(17);
  for (int i = 0; i < 200; ++i) {
    const Rational q(Integer(g.uniform(-5000, 5000)), Integer(g.uniform(1, 997)));
    const Real s = sin_pi(q, kP);
    const Real c = cos_pi(q, kP);
    CHECK(abs(s * s + c * c - Real(1L, kP)) < two_pow(-120));
  }
}

TEST_CASE("property: complex exp/log round trip") {
  Lcg g(5);
  for (int i = 0; i < 100; ++i) {
    const CNum z(dec(std::to_string(g.uniform(-300, 300)) + "/100"), dec(std::to_string(g.uniform(-300, 300)) + "/100"));
    CHECK(delta(exp(log(exp(z))), exp(z)) < two_pow(-100) * (exp(z).abs() + Real(1L, kP)));
    CHECK(delta(cosh(acosh(z)), z) < two_pow(-100) * (z.abs() + Real(1L, kP)));
  }
}

TEST_CASE("polynomial arithmetic") {
  const Poly z = poly_z();
  const Poly p = z * z - Poly::constant(Rational(1));
  CHECK(p.degree() == 2);
  CHECK(p.eval_exact(Rational(3)) == Rational(8));
  CHECK(p.divide_linear(Rational(1)) == z + Poly::constant(Rational(1)));
  CHECK_THROWS_AS(p.divide_linear(Rational(2)), DomainError);
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("property: taylor_shift round trip") {
  Lcg g(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c;
    const long deg = g.uniform(0, 8);
    for (long k = 0; k <= deg; ++k) c.emplace_back(Integer(g.uniform(-20, 20)), Integer(g.uniform(1, 9)));
    const Poly p(c);
    const Rational a(Integer(g.uniform(-9, 9)), Integer(g.uniform(1, 5)));
    CHECK(p.taylor_shift(a).taylor_shift(-a) == p);
    const Rational x(Integer(g.uniform(-9, 9)), Integer(g.uniform(1, 5)));
    CHECK(p.taylor_shift(a).eval_exact(x - a) == p.eval_exact(x));
  }
}

}
