#include "doctest.h"
#include "support.hpp"

#include "cyclespec/lfn.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

namespace {
Real over_root(long num, long m) { return Real(num, kP) / sqrt(Real(m, kP)); }
}

TEST_SUITE("lfn") {

TEST_CASE("quadratic character mod 5") {
  const DirichletCharacter chi = character(5, 2);
  const CNum want(over_root(8, 5));
  CHECK(delta(l_direct(chi, 1, kP).value, want) < two_pow(-110));
  CHECK(delta(l_via_gauss(chi, 1, kP).value, want) < two_pow(-110));
  CHECK(delta(l_polynomial(chi, 1, kP).value, want) < two_pow(-110));
  CHECK(delta(l_direct(chi, 2, kP).value, CNum(over_root(32, 5))) < two_pow(-110));
  CHECK(delta(l_via_gauss(chi, 2, kP).value, CNum(over_root(32, 5))) < two_pow(-110));
}

TEST_CASE("displayed and symbolic polynomial forms at n = 2") {
  const DirichletCharacter chi = character(5, 2);
  CHECK(delta(l_polynomial(chi, 2, kP, PolyForm::symbolic).value, CNum(over_root(32, 5))) < two_pow(-110));
  CHECK(delta(l_polynomial(chi, 2, kP, PolyForm::displayed).value, CNum(over_root(160, 5))) < two_pow(-110));
  CHECK(delta(l_polynomial(chi, 2, kP).value, l_polynomial(chi, 2, kP, PolyForm::displayed).value).is_zero());
  CHECK_THROWS_AS(l_polynomial(chi, 3, kP, PolyForm::displayed), DomainError);
}

TEST_CASE("odd characters give a vanishing L") {
  const LValue v = l_direct(character(5, 1), 2, kP);
  CHECK(v.vanishes);
  CHECK(v.value.is_zero());
  CHECK(l_tilde(character(5, 2), 1, kP).vanishes);
}

TEST_CASE("principal character at a prime modulus") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    CHECK(delta(l_direct(character(p, 0), 1, kP).value, CNum(Real(Rational(Integer(p * p - 1), Integer(3)), kP))) <
          two_pow(-100));
  }
}

TEST_CASE("frozen values mod 13") {
  const DirichletCharacter chi = character(13, 2);
  CHECK(delta(l_direct(chi, 3, kP).value, "10728.75747761640342200387757569710343753",
              "155.3415156682489218304407334655489199421") < two_pow(-90));
  CHECK(delta(l_via_gauss(chi, 3, kP).value, l_direct(chi, 3, kP).value) < two_pow(-90));
  CHECK(delta(l_polynomial(chi, 3, kP).value, l_direct(chi, 3, kP).value) < two_pow(-90));
  CHECK(delta(l_via_gauss(chi, 1, kP).value, "34.52793254231801351743649033038541578823",
              "4.880765754790606592619856636626023244834") < two_pow(-100));
}

TEST_CASE("route preconditions") {
  CHECK_THROWS_AS(l_via_gauss(character(5, 1), 1, kP), DomainError);
  CHECK_THROWS_AS(l_via_gauss(character(6, 0), 1, kP), DomainError);
  CHECK_THROWS_AS(l_hat(character(8, 1), 1, kP, LRoute::direct), DomainError);
  CHECK_THROWS_AS(l_tilde(character(6, 1), 1, kP, LRoute::derivative), DomainError);
  CHECK_NOTHROW(l_tilde(character(6, 1), 1, kP, LRoute::direct));
}

TEST_CASE("cotangent-weighted values") {
  const CNum third(Real(8L, kP) / (Real(3L, kP) * sqrt(Real(3L, kP))));
  CHECK(delta(l_tilde(character(3, 1), 1, kP, LRoute::direct).value, third) < two_pow(-110));
  CHECK(delta(l_tilde(character(3, 1), 1, kP, LRoute::derivative).value, third) < two_pow(-100));
  const DirichletCharacter chi = character(7, 1);
  CHECK(delta(l_tilde(chi, 1, kP, LRoute::direct).value, "20.99621498307975725342490300291765181348",
              "2.675622616195548013754277289394889263317") < two_pow(-100));
  CHECK(delta(l_tilde(chi, 2, kP, LRoute::derivative).value, "115.3035425690418397070016139448892421898",
              "4.134376740109244974650780528765994337437") < two_pow(-90));
  const LValue fd = l_tilde(chi, 2, kP, LRoute::finite_difference);
  CHECK(delta(fd.value, l_tilde(chi, 2, kP, LRoute::direct).value) < fd.error_budget);
}

TEST_CASE("secant-weighted values") {
  const CNum four_root5(Real(4L, kP) * sqrt(Real(5L, kP)));
  CHECK(delta(l_hat(character(5, 2), 1, kP, LRoute::direct).value, four_root5) < two_pow(-110));
  CHECK(delta(l_hat(character(5, 2), 1, kP).value, four_root5) < two_pow(-100));
  const DirichletCharacter chi = character(7, 2);
  CHECK(delta(l_hat(chi, 1, kP).value, "8.811626414829029514833227834089340613991",
              "5.861334312721575503694958705208168539492") < two_pow(-100));
  CHECK(delta(l_hat(chi, 3, kP).value, "100.3775073181421713662640878173797904591",
              "154.830087594744694157665756178861946978") < two_pow(-90));
  CHECK_THROWS_AS(l_hat(character(12, 1), 1, kP), DomainError);
}

TEST_CASE("property: polynomial in r has degree 2n and reproduces c(n-1)") {
  for (long m = 2; m <= 12; ++m) {
    for (long n = 1; n <= 4; ++n) {
      const Poly p = l_polynomial_in_r(m, n);
      CHECK(p.degree() == 2 * n);
    }
  }
}

TEST_CASE("property: L of a real even character is real") {
  for (long m = 3; m <= 30; ++m) {
    for (const auto& c : enumerate_characters(m)) {
      if (!c.is_real() || !c.is_even()) continue;
      for (long n = 1; n <= 3; ++n) {
        const LValue v = l_direct(c, n, kP);
        CHECK(abs(v.value.im()) < two_pow(-90) * (abs(v.value.re()) + Real(1L, kP)));
      }
    }
  }
}

TEST_CASE("property: routes agree on even primitive characters") {
  Lcg g(71);
  for (int i = 0; i < 25; ++i) {
    const long m = g.uniform(3, 30);
    const auto chars = enumerate_characters(m);
    const DirichletCharacter& c = chars[g.uniform(0, static_cast<long>(chars.size()) - 1)];
    if (!c.is_even() || !c.is_primitive()) continue;
    const long n = g.uniform(1, 4);
    const CNum d = l_direct(c, n, kP).value;
    const Real tol = two_pow(-80) * (d.abs() + Real(1L, kP));
    CHECK(delta(l_via_gauss(c, n, kP).value, d) < tol);
    CHECK(delta(l_polynomial(c, n, kP, PolyForm::symbolic).value, d) < tol);
  }
}

TEST_CASE("property: secant-weighted routes agree") {
  for (long m : {3L, 5L, 7L, 9L, 10L, 11L}) {
    for (const auto& c : enumerate_characters(m)) {
      if (!c.is_primitive()) continue;
      for (long n = 1; n <= 3; ++n) {
        const CNum d = l_hat(c, n, kP, LRoute::direct).value;
        CHECK(delta(l_hat(c, n, kP).value, d) < two_pow(-80) * (d.abs() + Real(1L, kP)));
      }
    }
  }
}

TEST_CASE("route names") {
  CHECK(std::string(to_string(LRoute::gauss_recurrence)) == "gauss_recurrence");
  CHECK(std::string(to_string(LRoute::finite_difference)) == "finite_difference");
}

}
