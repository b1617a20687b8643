#include "doctest.h"
#include "support.hpp"

#include "cyclespec/resolvent.hpp"

using namespace cyclespec;
using namespace cyclespec::testing;

namespace {
CNum cx(const char* re, const char* im) { return CNum(dec(re), dec(im)); }
Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }
}

TEST_SUITE("resolvent") {

TEST_CASE("frozen spectral value") {
  const CNum g = resolvent_spectral(5, q(3, 10), 2, cx("1", "1/2"));
  CHECK(delta(g, "0.02968852391552232782721797816484417427636", "-0.02103084688373607720401782021634372620208") <
        two_pow(-110));
  CHECK(delta(resolvent_closed(5, q(3, 10), 2, cx("1", "1/2")), g) < two_pow(-100));
  CHECK(delta(resolvent_hyperbolic(5, q(3, 10), 2, cx("1", "1/2")), g) < two_pow(-100));
}

TEST_CASE("s G tends to 1 for large s") {
  const CNum s = cx("1000000", "0");
  const CNum sg = s * resolvent_closed(7, q(1, 3), 0, s);
  CHECK(delta(sg, "1", "0") < dec("0.000002"));
}

TEST_CASE("value at s = 0 for a nonintegral shift") {
  const CNum v = resolvent_closed(3, q(3, 10), 1, CNum(Real(kP), Real(kP)), ResolventNorm::cancelled);
  CHECK(delta(v, "1.47213595499957939281834733746", "-0.171513425153809858988423546114") < two_pow(-90));
}

TEST_CASE("poles") {
  const std::vector<ResolventPole> p2 = resolvent_poles(2, q(0), kP);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].value == Real(-2L, kP));
  CHECK(p2[1].value.is_zero());
  const std::vector<ResolventPole> p4 = resolvent_poles(4, q(0), kP);
  REQUIRE(p4.size() == 3);
  CHECK(p4[1].coincident());
  CHECK(p4[1].indices == std::vector<long>{1, 3});
  CHECK(abs(p4[1].value + Real(1L, kP)) < two_pow(-120));
  CHECK(resolvent_poles(5, q(1, 3), kP).size() == 5);
}

TEST_CASE("evaluating on a pole names the eigenvalue index") {
  try {
    resolvent_spectral(2, q(0), 0, cx("-2", "0"));
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(resolvent_spectral(5, q(0), 0, CNum(Real(kP), Real(kP))), PoleError);
  CHECK_NOTHROW(resolvent_spectral(5, q(0), 0, CNum(Real(kP), Real(kP)), ResolventNorm::kernel, true));
  CHECK_THROWS_AS(resolvent_hyperbolic(5, q(1, 3), 0, cx("-1/10", "1")), DomainError);
}

TEST_CASE("laplace transform of the heat kernel") {
  const LaplaceResult a = resolvent_from_laplace(3, q(0), 0, 0, cx("1", "0"), Real(60L, kP));
  CHECK(delta(a.value, resolvent_spectral(3, q(0), 0, cx("1", "0"))) <
        a.quadrature_error + a.tail_bound + two_pow(-80));
  const LaplaceResult b = resolvent_from_laplace(6, q(1, 3), 2, 0, cx("1", "1"), Real(60L, kP));
  CHECK(delta(b.value, resolvent_spectral(6, q(1, 3), 2, cx("1", "1"))) <
        b.quadrature_error + b.tail_bound + two_pow(-80));
  CHECK(a.tail_bound < dec("1e-25"));
}

TEST_CASE("exact rational resolvent") {
  for (long m = 2; m <= 9; ++m) {
    for (long r = 0; r < m; ++r) {
      const RationalFn f = resolvent_rational(m, r);
      const CNum s = cx("1/2", "0");
      const CNum expect = resolvent_closed(m, q(0), r, s, ResolventNorm::cancelled) -
                          CNum(Real(1L, kP) / (Real(m, kP) * dec("1/2")));
      CHECK(delta(f.eval(s), expect) < two_pow(-100));
      const std::vector<Rational> c = f.taylor(1);
      CHECK(c[0] * Rational(m) == Rational(Integer(m * m - 6 * m * r + 6 * r * r - 1), Integer(6)));
    }
  }
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  const GaussRule& g = gauss_legendre(8, kP);
  Real s(kP);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * pow(g.nodes[i], 14);
  CHECK(abs(s - Real(q(2, 15), kP)) < two_pow(-120));
}

TEST_CASE("property: spectral, chebyshev and hyperbolic forms agree") {
  Lcg g(41);
  for (int i = 0; i < 60; ++i) {
    const long m = g.uniform(2, 20);
    const Rational beta(Integer(g.uniform(0, 59)), Integer(60));
    const long r = g.uniform(-m, 2 * m);
    const CNum s(dec(std::to_string(g.uniform(1, 192)) + "/64"), dec(std::to_string(g.uniform(-192, 192)) + "/64"));
    for (ResolventNorm norm : {ResolventNorm::kernel, ResolventNorm::cancelled}) {
      const CNum a = resolvent_spectral(m, beta, r, s, norm);
      const CNum b = resolvent_closed(m, beta, r, s, norm);
      const CNum c = resolvent_hyperbolic(m, beta, r, s, norm);
      CHECK(delta(a, b) < two_pow(-80));
      CHECK(delta(a, c) < two_pow(-80));
    }
  }
}

TEST_CASE("property: resolvent identity") {
  Lcg g(43);
  for (int i = 0; i < 20; ++i) {
    const long m = g.uniform(2, 10);
    const Rational beta(Integer(g.uniform(0, 9)), Integer(10));
    const CNum s1(dec(std::to_string(g.uniform(1, 100)) + "/32"), dec(std::to_string(g.uniform(-64, 64)) + "/32"));
    const CNum s2(dec(std::to_string(g.uniform(1, 100)) + "/32"), dec(std::to_string(g.uniform(-64, 64)) + "/32"));
    const long x = g.uniform(0, m - 1);
    const long y = g.uniform(0, m - 1);
    CNum conv(kP);
    for (long z = 0; z < m; ++z) {
      conv += resolvent_closed(m, beta, x - z, s1) * resolvent_closed(m, beta, z - y, s2);
    }
    const CNum lhs = resolvent_closed(m, beta, x - y, s1) - resolvent_closed(m, beta, x - y, s2);
    CHECK(delta(lhs, (s2 - s1) * conv) < two_pow(-70));
  }
}

}
