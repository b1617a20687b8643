#pragma once

// Scalar types shared by every module: exact rationals (GMP) and complex
// numbers whose parts are MPFR reals at an explicit binary precision.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "cyclespec/error.hpp"

namespace cyclespec {

using Integer = mpz_class;
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMinPrecision = 53;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num) : q_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p/q", integers, and decimals with optional exponent ("0.3",
  /// "-1.25e-3"). Decimals are converted exactly in base 10.
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Integer floor() const;
  /// x - floor(x), always in [0, 1).
  Rational frac() const;
  Rational abs() const { return Rational(::abs(q_)); }
  double to_double() const { return q_.get_d(); }
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned long exponent);
Rational binomial(unsigned long n, unsigned long k);
Rational factorial(unsigned long n);

/// RAII wrapper over an MPFR value. Binary operations produce a result at the
/// larger of the two operand precisions, rounding to nearest.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(double value, Precision prec);
  Real(int value, Precision prec) : Real(static_cast<long>(value), prec) {}
  Real(long value, Precision prec);
  Real(const Rational& value, Precision prec);
  Real(const Integer& value, Precision prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Deterministic decimal rendering with `digits` significant digits.
  std::string str(int digits) const;
  /// Same value rounded to a new precision.
  Real with_precision(Precision prec) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  void reset_precision(Precision prec);
  mpfr_t v_;
};

Real pi(Precision prec);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
/// 2^e at the given precision.
Real exp2i(long e, Precision prec);

/// sin(π q) and cos(π q) for exact rational q; the argument is reduced exactly,
/// so the result is accurate to the working precision for any size of q and is
/// exactly zero at the zeros.
Real sin_pi(const Rational& q, Precision prec);
Real cos_pi(const Rational& q, Precision prec);

class CNum {
 public:
  explicit CNum(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  CNum(Real re, Real im);
  explicit CNum(Real re);

  Precision precision() const { return std::max(re_.precision(), im_.precision()); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Real norm() const;  // |z|^2
  Real abs() const;
  CNum conj() const { return CNum(re_, -im_); }
  /// "a+bi" with the given number of significant digits per part.
  std::string str(int digits) const;

  CNum operator-() const { return CNum(-re_, -im_); }
  CNum& operator+=(const CNum& o);
  CNum& operator-=(const CNum& o);
  CNum& operator*=(const CNum& o);
  /// Throws DomainError when |o| is below the default absolute tolerance of
  /// the working precision.
  CNum& operator/=(const CNum& o);
  CNum& operator*=(const Real& o);
  CNum& operator/=(const Real& o);
  friend CNum operator+(CNum a, const CNum& b) { return a += b; }
  friend CNum operator-(CNum a, const CNum& b) { return a -= b; }
  friend CNum operator*(CNum a, const CNum& b) { return a *= b; }
  friend CNum operator/(CNum a, const CNum& b) { return a /= b; }
  friend CNum operator*(CNum a, const Real& b) { return a *= b; }
  friend CNum operator*(const Real& b, CNum a) { return a *= b; }
  friend CNum operator/(CNum a, const Real& b) { return a /= b; }

 private:
  Real re_;
  Real im_;
};

CNum exp(const CNum& z);
/// Principal branch.
CNum log(const CNum& z);
/// Principal branch.
CNum sqrt(const CNum& z);
CNum sinh(const CNum& z);
CNum cosh(const CNum& z);
/// Principal branch, log(z + sqrt(z-1) sqrt(z+1)).
CNum acosh(const CNum& z);
CNum pow(const CNum& z, long n);
/// e^{2πiq} for exact rational q.
CNum unit_root(const Rational& q, Precision prec);

/// Mixed absolute/relative comparison policy.
struct Tolerance {
  Real abs_eps;
  Real rel_eps;

  /// abs_eps = rel_eps = 2^(48-p): 2^-80 at the default 128 bits.
  static Tolerance for_precision(Precision prec);
  /// abs_eps = 2^abs_log2, rel_eps = 2^rel_log2.
  static Tolerance from_log2(long abs_log2, long rel_log2, Precision prec);
  Real bound(const Real& a_mag, const Real& b_mag) const;
};

CNum rational_to_cnum(const Rational& x, Precision prec);
bool approx_eq(const CNum& a, const CNum& b, const Tolerance& tol);
bool approx_eq(const Real& a, const Real& b, const Tolerance& tol);

/// Number of significant decimal digits printed for a given binary precision.
int display_digits(Precision prec);

}  // namespace cyclespec
