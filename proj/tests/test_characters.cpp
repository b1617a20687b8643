#include <numeric>

#include "doctest.h"
#include "support.hpp"

#include "cyclespec/characters.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

TEST_SUITE("characters") {

TEST_CASE("counts and parity") {
  const auto c5 = enumerate_characters(5);
  CHECK(c5.size() == 4);
  CHECK(std::count_if(c5.begin(), c5.end(), [](const DirichletCharacter& c) { return c.is_even(); }) == 2);
  CHECK(enumerate_characters(3).size() == 2);
  CHECK(enumerate_characters(8).size() == 4);
  CHECK(enumerate_characters(2).size() == 1);
  CHECK(c5[0].is_principal());
  CHECK(c5[2].is_real());
  CHECK_FALSE(c5[1].is_even());
  CHECK_THROWS_AS(enumerate_characters(1), DomainError);
  CHECK_THROWS_AS(character(5, 4), DomainError);
}

TEST_CASE("unit group generators") {
  CHECK(unit_group(5).generators == std::vector<long>{2});
  CHECK(unit_group(8).generators == std::vector<long>{7, 5});
  CHECK(unit_group(8).orders == std::vector<long>{2, 2});
  CHECK(unit_group(6).generators == std::vector<long>{5});
  CHECK(unit_group(15).orders == std::vector<long>{2, 4});
  for (long m : {7L, 12L, 16L, 21L, 40L}) {
    const UnitGroup g = unit_group(m);
    CHECK(std::accumulate(g.orders.begin(), g.orders.end(), 1L, std::multiplies<>()) == euler_phi(m));
  }
}

TEST_CASE("values") {
  const DirichletCharacter chi = character(5, 1);
  CHECK(*chi.value_exponent(2) == Rational(Integer(1), Integer(4)));
  CHECK(delta(chi.value(2, kP), "0", "1").is_zero());
  CHECK_FALSE(chi.value_exponent(10).has_value());
  CHECK(chi.value(5, kP).is_zero());
  CHECK(chi.conj().index() == 3);
  CHECK(chi.conj().conj() == chi);
}

TEST_CASE("conductors") {
  CHECK(conductor(character(6, 1)) == 3);
  CHECK_FALSE(is_primitive(character(6, 1)));
  CHECK(conductor(character(5, 0)) == 1);
  CHECK(is_primitive(character(5, 2)));
  CHECK(conductor(character(8, 0)) == 1);
  int primitive8 = 0;
  for (const auto& c : enumerate_characters(8)) primitive8 += c.is_primitive();
  CHECK(primitive8 == 2);
  int primitive9 = 0;
  for (const auto& c : enumerate_characters(9)) primitive9 += c.is_primitive();
  CHECK(primitive9 == 4);
}

TEST_CASE("gauss sums") {
  CHECK(delta(gauss_sum(character(5, 2), kP), CNum(sqrt(Real(5L, kP)))) < two_pow(-120));
  CHECK(delta(gauss_sum(character(7, 1), kP), "-2.440133358345537678987988371076050317832",
              "1.022618791871794130874525703202543037842") < two_pow(-120));
  CHECK(delta(gauss_sum(character(3, 1), kP), CNum(Real(kP), sqrt(Real(3L, kP)))) < two_pow(-120));
}

TEST_CASE("twisted sum identity") {
  const TwistedSumCheck a = twisted_sum_identity_check(character(5, 2), 2, kP);
  CHECK(delta(a.lhs, CNum(-sqrt(Real(5L, kP)))) < two_pow(-120));
  CHECK(a.delta < two_pow(-120));
  CHECK(twisted_sum_identity_check(character(5, 2), 0, kP).lhs.abs() < two_pow(-120));
  const TwistedSumCheck b = twisted_sum_identity_check(character(9, 1), 3, kP);
  CHECK(b.lhs.abs() < two_pow(-120));
  CHECK(b.rhs.is_zero());
  CHECK_THROWS_AS(twisted_sum_identity_check(character(6, 1), 1, kP), DomainError);
}

TEST_CASE("property: |tau|^2 = m for primitive characters") {
  for (long m = 3; m <= 40; ++m) {
    for (const auto& c : enumerate_characters(m)) {
      if (!c.is_primitive()) continue;
      CHECK(abs(gauss_sum(c, kP).norm() - Real(m, kP)) < two_pow(-100));
    }
  }
}

TEST_CASE("property: orthogonality") {
  Lcg g(61);
  for (int i = 0; i < 15; ++i) {
    const long m = g.uniform(2, 60);
    const auto chars = enumerate_characters(m);
    CHECK(static_cast<long>(chars.size()) == euler_phi(m));
    for (long a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CNum s(kP);
      for (const auto& c : chars) s += c.value(a, kP);
      CHECK(delta(s, CNum(Real(a == 1 ? euler_phi(m) : 0L, kP))) < two_pow(-100));
    }
    for (const auto& c : chars) {
      CNum s(kP);
      for (long a = 0; a < m; ++a) s += c.value(a, kP);
      CHECK(delta(s, CNum(Real(c.is_principal() ? euler_phi(m) : 0L, kP))) < two_pow(-100));
    }
  }
}

TEST_CASE("property: multiplicativity") {
  Lcg g(67);
  for (int i = 0; i < 200; ++i) {
    const long m = g.uniform(2, 50);
    const auto c = character(m, g.uniform(0, euler_phi(m) - 1));
    const long a = g.uniform(0, 3 * m);
    const long b = g.uniform(0, 3 * m);
    CHECK(delta(c.value(a * b, kP), c.value(a, kP) * c.value(b, kP)) < two_pow(-120));
  }
}

}
