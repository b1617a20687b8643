#include "doctest.h"
#include "support.hpp"

#include "cyclespec/bessel.hpp"
#include "cyclespec/heat.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

TEST_SUITE("bessel") {

TEST_CASE("frozen reference values") {
  const BesselEval i12 = bessel_i(1, Real(2L, kP), kP);
  CHECK(abs(exp(Real(-2L, kP)) * i12.value - dec("0.2152692892489376591585051432551101565137")) < two_pow(-110));
  CHECK(abs(bessel_i(0, Real(1L, kP), kP).value - dec("1.266065877752008335598244625214717537608")) <
        two_pow(-110));
  CHECK(abs(bessel_i(3, dec("0.5"), kP).value - dec("0.002645111968990285856353440703065693559339")) <
        two_pow(-120));
  CHECK(abs(bessel_i(5, Real(10L, kP), kP).value - dec("777.1882864032599599072934848023396328527")) <
        two_pow(-100));
  CHECK(abs(bessel_i(-5, Real(10L, kP), kP).value - bessel_i(5, Real(10L, kP), kP).value) < two_pow(-100));
}

TEST_CASE("value at zero") {
  CHECK(bessel_i(0, Real(kP), kP).value == Real(1L, kP));
  CHECK(bessel_i(3, Real(kP), kP).value.is_zero());
}

TEST_CASE("line kernel") {
  CHECK(delta(heat_kernel_line(0, 0, Real(kP), kP), "1", "0").is_zero());
  CHECK(heat_kernel_line(3, 0, Real(kP), kP).is_zero());
  CHECK(delta(heat_kernel_line(2, 1, Real(2L, kP), kP), "0.2152692892489376591585051432551101565137", "0") <
        two_pow(-110));
}

TEST_CASE("property: I_{n-1} + I_{n+1} = 2 I_n'") {
  Lcg g(3);
  const Real h = two_pow(-20);
  for (int i = 0; i < 40; ++i) {
    const long n = g.uniform(0, 12);
    const Real t = dec(std::to_string(g.uniform(1, 2000)) + "/100");
    const Real lhs = bessel_i(n - 1, t, kP).value + bessel_i(n + 1, t, kP).value;
    const Real d = (bessel_i(n, t + h, kP).value - bessel_i(n, t - h, kP).value) / h;
    CHECK(abs(lhs - d) < (abs(lhs) + Real(1L, kP)) * two_pow(-36));
  }
}

TEST_CASE("tail bounds are certified by summing the neglected images") {
  for (long m : {2L, 3L, 7L}) {
    for (const char* ts : {"1/10", "1", "5"}) {
      const Real t = dec(ts);
      const long ell = 1;
      const long K = bessel_tail_index(m, ell, t, two_pow(-90));
      CHECK(bessel_image_tail(m, ell, t, K) < two_pow(-90));
      Real neglected(kP);
      for (long k = K + 1; k <= K + 40; ++k) {
        neglected += exp(-t) * (bessel_i(ell + k * m, t, kP).value + bessel_i(ell - k * m, t, kP).value);
      }
      CHECK(neglected <= bessel_image_tail(m, ell, t, K));
    }
  }
}

TEST_CASE("tail index examples") {
  CHECK(bessel_tail_index(3, 0, Real(1L, kP), two_pow(-90)) > 0);
  CHECK(bessel_tail_index(3, 0, Real(1L, kP), two_pow(-90)) <=
        bessel_tail_index(3, 0, Real(5L, kP), two_pow(-90)));
  CHECK(bessel_image_tail(4, 1, Real(1L, kP), 0) > bessel_image_tail(4, 1, Real(1L, kP), 1));
}

}
