#include "doctest.h"
#include "support.hpp"

#include "cyclespec/trigsums.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

namespace {
Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }
SumSpec spec(SumKind kind, long m, long r, const Rational& shift, long n) { return {kind, m, r, shift, n}; }
CNum e_minus_i_pi_3() { return unit_root(q(-1, 6), kP); }
}

TEST_SUITE("trigsums") {

TEST_CASE("classical cosecant evaluation") {
  const SumResult c = closed_sum(spec(SumKind::cosecant, 5, 0, q(1, 2), 1), kP);
  REQUIRE(c.exact);
  CHECK(*c.exact == q(5));
  CHECK(delta(direct_sum(spec(SumKind::cosecant, 5, 0, q(1, 2), 1), kP).value, "5", "0") < two_pow(-110));
  CHECK(delta(coeffs_from_generating_function(5, 0, q(1, 2), 1, kP)[0].value, "5", "0") < two_pow(-110));
}

TEST_CASE("fourth-power cosecant sum over thirds") {
  for (long k = 1; k <= 6; ++k) {
    const Rational want = q(-(39 * k * k * k * k + 30 * k * k + 11), 45);
    CHECK(cosecant_noshift_values(3 * k, k, 2)[1] * q(3 * k) == want);
  }
  CHECK(cosecant_noshift_values(3, 1, 2)[1] == q(-16, 27));
}

TEST_CASE("second-power cosecant sum over thirds") {
  for (long k = 1; k <= 6; ++k) {
    CHECK(cosecant_noshift_values(3 * k, k, 1)[0] * q(3 * k) == q(-3 * k * k - 1, 3));
  }
}

TEST_CASE("shifted sums over thirds at beta = 1/2") {
  for (long k = 1; k <= 4; ++k) {
    const std::vector<SumValue> v = coeffs_from_generating_function(3 * k, k, q(1, 2), 2, kP);
    const Real kk(k * k, kP);
    CHECK(delta(v[0].value * Real(3 * k, kP), e_minus_i_pi_3() * (Real(3L, kP) * kk)) < two_pow(-100));
    CHECK(delta(v[1].value * Real(3 * k, kP), e_minus_i_pi_3() * (kk * Real(13 * k * k + 2, kP))) < two_pow(-100));
  }
}

TEST_CASE("double-argument secant sums") {
  const std::vector<SumValue> s = double_arg_coeffs(SumKind::secant_double, 3, 1, q(0), 2, kP);
  REQUIRE(s[0].exact);
  CHECK(*s[0].exact == q(1));
  CHECK(delta(s[1].value, "-1", "0") < two_pow(-110));
  const std::vector<SumValue> h = double_arg_coeffs(SumKind::secant_double, 9, 3, q(1, 2), 1, kP);
  CHECK(delta(h[0].value, e_minus_i_pi_3() * Real(-1L, kP)) < two_pow(-100));
  const std::vector<SumValue> odd = double_arg_coeffs(SumKind::secant_double, 5, 0, q(1, 3), 3, kP);
  CHECK(delta(odd[2].value, "-176", "0") < two_pow(-100));
}

TEST_CASE("c(0) closed form") {
  for (long m = 2; m <= 20; ++m) {
    for (long r = 0; r < m; ++r) {
      CHECK(recurrence_unshifted(m, r, 1)[0] == q(m * m - 6 * m * r + 6 * r * r - 1, 6 * m));
    }
  }
  CHECK(cosecant_noshift_values(5, 0, 1)[0] == q(8, 5));
}

TEST_CASE("frozen oracle values") {
  CHECK(delta(closed_sum(spec(SumKind::cosecant, 7, 2, q(1, 3), 3), kP).value,
              "12982.18101716944972359095909028016495585", "-207.4805006705392534138273904235400095453") <
        two_pow(-90));
  CHECK(delta(closed_sum(spec(SumKind::secant, 6, 1, q(1, 5), 2), kP).value,
              "-1399.339027649485933024723366873155343711", "4.194316731247720525130398013628387673363") <
        two_pow(-90));
  const SumResult cot = closed_sum(spec(SumKind::cotangent, 5, 1, q(0), 2), kP);
  CHECK(delta(cot.value, "0.44", "0") < two_pow(-100));
  CHECK(delta(closed_sum(spec(SumKind::alternating_cosecant, 6, 0, q(1, 4), 2), kP).value,
              "3394.112549695428117124052938103275388567", "0") < two_pow(-90));
}

TEST_CASE("cotangent and tangent reductions") {
  CHECK(delta(closed_sum(spec(SumKind::cotangent, 5, 0, q(1, 2), 1), kP).value, "4", "0") < two_pow(-100));
  const SumSpec c = spec(SumKind::cotangent, 7, 2, q(3, 10), 2);
  CHECK(delta(closed_sum(c, kP).value, direct_sum(c, kP).value) < two_pow(-90));
  const SumSpec t = spec(SumKind::tangent, 5, 0, q(0), 1);
  CHECK(delta(closed_sum(t, kP).value, direct_sum(t, kP).value) < two_pow(-90));
}

TEST_CASE("secant sums") {
  for (long r = 0; r < 6; ++r) {
    const std::vector<Rational> s = secant_noshift_values(6, r, 2);
    const std::vector<Rational> c = cosecant_noshift_values(6, r, 2);
    const Rational sign = r % 2 == 0 ? q(1) : q(-1);
    CHECK(s[1] == sign * c[1]);
  }
  CHECK(secant_noshift_values(2, 1, 1)[0] == q(1, 2));
  CHECK(cosecant_noshift_values(2, 1, 1)[0] == q(-1, 2));
  const SumSpec a = spec(SumKind::secant_noshift, 5, 0, q(0), 1);
  CHECK(delta(closed_sum(a, kP).value, direct_sum(a, kP).value) < two_pow(-100));
  const std::vector<SumValue> v = secant_coeffs(7, 3, q(1, 5), 4, kP);
  for (long n = 1; n <= 4; ++n) {
    CHECK(delta(v[n - 1].value, direct_sum(spec(SumKind::secant, 7, 3, q(1, 5), n), kP).value) <
          two_pow(-80) * (v[n - 1].value.abs() + Real(1L, kP)));
  }
}

TEST_CASE("alternating sums") {
  const SumValue a = alternating_sum(4, q(0), 1, kP);
  CHECK(delta(a.value, "-3", "0") < two_pow(-110));
  CHECK_THROWS_AS(alternating_sum(5, q(0), 1, kP), DomainError);
}

TEST_CASE("routes agree") {
  const std::vector<SumValue> g = coeffs_from_generating_function(7, 2, q(3, 10), 6, kP);
  const std::vector<SumValue> rec = recurrence_shifted(7, 2, q(3, 10), 6, kP);
  for (long n = 1; n <= 6; ++n) {
    const CNum d = direct_sum(spec(SumKind::cosecant, 7, 2, q(3, 10), n), kP).value;
    const Real scale = d.abs() + Real(1L, kP);
    CHECK(delta(g[n - 1].value, d) < two_pow(-80) * scale);
    CHECK(delta(rec[n - 1].value, d) < two_pow(-80) * scale);
  }
  const std::vector<SumValue> r5 = recurrence_shifted(6, 1, q(1, 4), 5, kP);
  for (long n = 1; n <= 5; ++n) {
    const CNum d = direct_sum(spec(SumKind::cosecant, 6, 1, q(1, 4), n), kP).value;
    CHECK(delta(r5[n - 1].value, d) < two_pow(-80) * (d.abs() + Real(1L, kP)));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(validate(spec(SumKind::cosecant, 5, 0, q(2), 1)), DomainError);
  CHECK_THROWS_AS(validate(spec(SumKind::secant, 4, 0, q(0), 1)), DomainError);
  CHECK_THROWS_AS(validate(spec(SumKind::secant_double, 8, 0, q(1), 1)), DomainError);
  CHECK_THROWS_AS(validate(spec(SumKind::secant_double, 6, 0, q(1, 2), 1)), DomainError);
  CHECK_THROWS_AS(validate(spec(SumKind::secant_double, 5, 0, q(1, 4), 1)), DomainError);
  CHECK_THROWS_AS(validate(spec(SumKind::cosecant_double, 5, 0, q(1, 2), 1)), DomainError);
  CHECK_THROWS_AS(validate(spec(SumKind::cosecant, 1, 0, q(1, 2), 1)), DomainError);
  CHECK_THROWS_AS(coeffs_from_generating_function(5, 0, q(3), 2, kP), DomainError);
  CHECK_NOTHROW(validate(spec(SumKind::secant, 5, 0, q(0), 1)));
}

TEST_CASE("kind names") {
  CHECK(parse_sum_kind("cosecant_double_noshift") == SumKind::cosecant_double_noshift);
  CHECK(std::string(to_string(SumKind::alternating_cosecant)) == "alternating_cosecant");
  CHECK_THROWS_AS(parse_sum_kind("cosine"), std::invalid_argument);
  CHECK(is_double_kind(SumKind::secant_double));
  CHECK_FALSE(is_double_kind(SumKind::secant));
}

TEST_CASE("classical generating functions") {
  for (long m = 2; m <= 6; ++m) {
    for (const ChuMariniRow& row : chu_marini_check(m, 3, ChuMariniVariant::csc, q(0), kP)) {
      CHECK(row.delta < two_pow(-60));
    }
  }
  for (const ChuMariniRow& row : chu_marini_check(6, 3, ChuMariniVariant::csc_alt, q(0), kP)) {
    CHECK(row.delta < two_pow(-60));
  }
}

TEST_CASE("property: closed forms match the direct oracle") {
  const SumKind kinds[] = {SumKind::cosecant, SumKind::secant, SumKind::cosecant_double,
                           SumKind::secant_double, SumKind::cotangent, SumKind::tangent};
  Lcg g(53);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const SumSpec s = spec(kinds[g.uniform(0, 5)], g.uniform(2, 12), 0, g.proper_fraction(12), g.uniform(1, 4));
    SumSpec t = s;
    t.r = g.uniform(0, s.m - 1);
    try {
      validate(t);
    } catch (const DomainError&) {
      continue;
    }
    const CNum d = direct_sum(t, kP).value;
    CHECK(delta(closed_sum(t, kP).value, d) < two_pow(-80) * (d.abs() + Real(1L, kP)));
    ++checked;
  }
  CHECK(checked > 150);
}

}
