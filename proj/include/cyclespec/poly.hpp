#pragma once

#include <string>
#include <vector>

#include "cyclespec/numeric.hpp"

namespace cyclespec {

/// Univariate polynomial with exact rational coefficients, index = degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly constant(const Rational& c) { return monomial(c, 0); }

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^k, zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

  Rational eval_exact(const Rational& z) const;
  CNum eval(const CNum& z) const;
  /// Coefficients of p in powers of (z - a).
  Poly taylor_shift(const Rational& a) const;
  /// Exact division by (z - root); throws DomainError if the remainder is nonzero.
  Poly divide_linear(const Rational& root) const;
  std::string str(const std::string& var = "z") const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// The polynomial z.
Poly poly_z();

}  // namespace cyclespec
