#include "cyclespec/chebyshev.hpp"

#include <deque>
#include <mutex>

namespace cyclespec {

namespace {

struct ChebCache {
  std::mutex mu;
  std::deque<Poly> polys;

  const Poly& get(long n) {
    std::lock_guard<std::mutex> lock(mu);
    const Poly two_z = Poly::monomial(Rational(2), 1);
    while (static_cast<long>(polys.size()) <= n) {
      const std::size_t k = polys.size();
      polys.push_back(two_z * polys[k - 1] - polys[k - 2]);
    }
    return polys[static_cast<std::size_t>(n)];
  }
};

ChebCache& t_cache() {
  static ChebCache* c = [] {
    auto* cache = new ChebCache;
    cache->polys.push_back(Poly::constant(Rational(1)));
    cache->polys.push_back(poly_z());
    return cache;
  }();
  return *c;
}

ChebCache& u_cache() {
  static ChebCache* c = [] {
    auto* cache = new ChebCache;
    cache->polys.push_back(Poly::constant(Rational(1)));
    cache->polys.push_back(Poly::monomial(Rational(2), 1));
    return cache;
  }();
  return *c;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

const Poly& cheb_t(long n) {
  require(n >= 0, "cheb_t requires n >= 0");
  return t_cache().get(n);
}

const Poly& cheb_u(long n) {
  require(n >= -1, "cheb_u requires n >= -1");
  static const Poly zero;
  if (n == -1) return zero;
  return u_cache().get(n);
}

Rational shifted_t_coeff(long n, long k) {
  require(n >= 0 && k >= 0, "a_n(k) requires n, k >= 0");
  if (k > n) return Rational();
  Rational out(1);
  const Rational nn = Rational(n) * Rational(n);
  for (long j = 0; j < k; ++j) out *= (nn - Rational(j * j)) / Rational(2 * j + 1);
  return out / factorial(static_cast<unsigned long>(k));
}

Rational shifted_u_coeff(long n, long k) {
  require(n >= -1 && k >= 0, "b_n(k) requires n >= -1, k >= 0");
  if (n == -1 || k > n) return Rational();
  const Rational n1(n + 1);
  Rational out(1);
  for (long j = 0; j <= k; ++j) out *= (n1 * n1 - Rational(j * j)) / Rational(2 * j + 1);
  return out / (n1 * factorial(static_cast<unsigned long>(k)));
}

Rational monomial_t_coeff(long n, long j) {
  require(n >= 0 && j >= 0 && j <= n, "t_n(j) requires 0 <= j <= n");
  if (n == 0) return Rational(1);
  if ((n - j) % 2 != 0) return Rational();
  const long k = (n - j) / 2;
  Rational out = binomial(static_cast<unsigned long>((n + j) / 2), static_cast<unsigned long>(k));
  out *= Rational(n) / Rational(n + j);
  out *= pow(Rational(2), static_cast<unsigned long>(j));
  return k % 2 == 0 ? out : -out;
}

Rational monomial_u_coeff(long n, long j) {
  if (n == -1 && j >= 0) return Rational();
  require(n >= 0 && j >= 0 && j <= n, "u_n(j) requires 0 <= j <= n");
  if ((n - j) % 2 != 0) return Rational();
  const long k = (n - j) / 2;
  Rational out = binomial(static_cast<unsigned long>((n + j) / 2), static_cast<unsigned long>(k));
  out *= pow(Rational(2), static_cast<unsigned long>(j));
  return k % 2 == 0 ? out : -out;
}

Rational shifted_t_or_zero(long n, long k) {
  return (n < 0 || k < 0 || k > n) ? Rational() : shifted_t_coeff(n, k);
}

Rational shifted_u_or_zero(long n, long k) {
  return (n < 0 || k < 0 || k > n) ? Rational() : shifted_u_coeff(n, k);
}

Rational monomial_t_or_zero(long n, long j) {
  return (n < 0 || j < 0 || j > n) ? Rational() : monomial_t_coeff(n, j);
}

Rational monomial_u_or_zero(long n, long j) {
  return (n < 0 || j < 0 || j > n) ? Rational() : monomial_u_coeff(n, j);
}

Poly shifted_u_poly(long k) {
  require(k >= 0, "shifted_u_poly requires k >= 0");
  Poly out = poly_z();
  const Poly x2 = poly_z() * poly_z();
  for (long j = 1; j <= k; ++j) {
    out *= (x2 - Poly::constant(Rational(j * j))) * (Rational(1) / Rational(2 * j + 1));
  }
  return out * (Rational(1) / factorial(static_cast<unsigned long>(k)));
}

Poly shifted_t_poly(long k) {
  require(k >= 0, "shifted_t_poly requires k >= 0");
  Poly out = Poly::constant(Rational(1));
  const Poly x2 = poly_z() * poly_z();
  for (long j = 0; j < k; ++j) {
    out *= (x2 - Poly::constant(Rational(j * j))) * (Rational(1) / Rational(2 * j + 1));
  }
  return out * (Rational(1) / factorial(static_cast<unsigned long>(k)));
}

}  // namespace cyclespec
