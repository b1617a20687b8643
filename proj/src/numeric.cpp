#include "cyclespec/numeric.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>
#include <utility>

namespace cyclespec {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(first, last - first + 1);

  static const std::regex frac_re(R"(^([+-]?\d+)\s*/\s*(\d+)$)");
  static const std::regex dec_re(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, frac_re)) {
    Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    Integer den(m[2].str(), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
  }
  if (std::regex_match(s, m, dec_re)) {
    const std::string int_part = m[2].str();
    const std::string frac_part = m[3].str();
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    long exponent = 0;
    if (m[4].matched) {
      const std::string e = m[4].str();
      if (e.size() > 6) throw std::invalid_argument("exponent out of range in '" + s + "'");
      exponent = std::stol(e);
    }
    exponent -= static_cast<long>(frac_part.size());
    Integer digits(int_part + frac_part, 10);
    if (m[1].str() == "-") digits = -digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    return exponent >= 0 ? Rational(Integer(digits * scale)) : Rational(digits, scale);
  }
  throw std::invalid_argument("not a rational number: '" + s + "'");
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const { return q_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

// ---------------------------------------------------------------- Real

Real::Real(Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (v_->_mpfr_d == nullptr) {
    mpfr_init2(v_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(v_, other.precision());
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(v_[0], other.v_[0]);
  return *this;
}

Real::~Real() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

void Real::reset_precision(Precision prec) {
  if (prec > precision()) mpfr_prec_round(v_, prec, MPFR_RNDN);
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(std::max(digits, 1)), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (mant[0] == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  std::string body;
  const long e = static_cast<long>(e10);
  if (e > 21 || e < -5) {
    body = mant.substr(0, 1);
    if (mant.size() > 1) body += "." + mant.substr(1);
    const long exp = e - 1;
    body += (exp < 0 ? "e-" : "e+") + std::to_string(std::labs(exp));
  } else if (e <= 0) {
    body = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
  } else if (static_cast<size_t>(e) >= mant.size()) {
    body = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
  } else {
    body = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
  }
  return sign_str + body;
}

Real Real::with_precision(Precision prec) const {
  Real out(prec);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& o) {
  reset_precision(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  reset_precision(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  reset_precision(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DomainError("real division by zero");
  reset_precision(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename F>
Real unary(const Real& x, F f) {
  Real out(x.precision());
  f(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real pi(Precision prec) {
  Real out(prec);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }

Real atan2(const Real& y, const Real& x) {
  Real out(std::max(x.precision(), y.precision()));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real ldexp(const Real& x, long e) {
  Real out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long n) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real exp2i(long e, Precision prec) {
  Real out(prec);
  mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
  return out;
}

Real sin_pi(const Rational& q, Precision prec) {
  Rational r = q - Rational(2) * Rational(Integer((q / Rational(2)).floor()));
  int sign = 1;
  if (r >= Rational(1)) {
    r -= Rational(1);
    sign = -1;
  }
  if (r > Rational(1, 2)) r = Rational(1) - r;
  Real out(prec);
  if (r.is_zero()) {
    out = Real(0L, prec);
  } else if (r == Rational(1, 2)) {
    out = Real(1L, prec);
  } else if (r == Rational(1, 6)) {
    out = ldexp(Real(1L, prec), -1);
  } else {
    const Precision work = prec + 16;
    Real x = pi(work) * Real(r, work);
    mpfr_sin(x.get(), x.get(), MPFR_RNDN);
    out = x.with_precision(prec);
  }
  return sign < 0 ? -out : out;
}

Real cos_pi(const Rational& q, Precision prec) { return sin_pi(q + Rational(1, 2), prec); }

// ---------------------------------------------------------------- CNum

CNum::CNum(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

CNum::CNum(Real re) : re_(std::move(re)), im_(Real(re_.precision())) {}

Real CNum::norm() const { return re_ * re_ + im_ * im_; }

Real CNum::abs() const {
  Real out(precision());
  mpfr_hypot(out.get(), re_.get(), im_.get(), MPFR_RNDN);
  return out;
}

std::string CNum::str(int digits) const {
  std::string out = re_.str(digits);
  if (im_.sign() < 0) {
    out += "-" + (-im_).str(digits);
  } else {
    out += "+" + im_.str(digits);
  }
  return out + "i";
}

CNum& CNum::operator+=(const CNum& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CNum& CNum::operator-=(const CNum& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CNum& CNum::operator*=(const CNum& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CNum& CNum::operator/=(const CNum& o) {
  const Precision p = std::max(precision(), o.precision());
  const Real n = o.norm();
  const Real eps = exp2i(48 - p, p);
  if (n < eps * eps) throw DomainError("division by a complex value below the absolute tolerance");
  Real re = (re_ * o.re_ + im_ * o.im_) / n;
  Real im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CNum& CNum::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

CNum& CNum::operator/=(const Real& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

CNum exp(const CNum& z) {
  const Real r = exp(z.re());
  return CNum(r * cos(z.im()), r * sin(z.im()));
}

CNum log(const CNum& z) {
  if (z.is_zero()) throw DomainError("logarithm of zero");
  return CNum(log(z.abs()), atan2(z.im(), z.re()));
}

CNum sqrt(const CNum& z) {
  const Precision p = z.precision();
  if (z.is_zero()) return CNum(p);
  const Real t = sqrt(ldexp(z.abs() + abs(z.re()), -1));
  if (z.re().sign() >= 0) return CNum(t, z.im() / ldexp(t, 1));
  Real im = t;
  if (mpfr_signbit(z.im().get())) im = -im;
  return CNum(abs(z.im()) / ldexp(t, 1), im);
}

CNum sinh(const CNum& z) {
  const CNum a = exp(z);
  const CNum b = exp(-z);
  CNum d = a - b;
  return CNum(ldexp(d.re(), -1), ldexp(d.im(), -1));
}

CNum cosh(const CNum& z) {
  const CNum a = exp(z);
  const CNum b = exp(-z);
  CNum d = a + b;
  return CNum(ldexp(d.re(), -1), ldexp(d.im(), -1));
}

CNum acosh(const CNum& z) {
  const Precision p = z.precision();
  const CNum one(Real(1L, p));
  return log(z + sqrt(z - one) * sqrt(z + one));
}

CNum pow(const CNum& z, long n) {
  const Precision p = z.precision();
  if (n < 0) return CNum(Real(1L, p)) / pow(z, -n);
  CNum result(Real(1L, p));
  CNum base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

CNum unit_root(const Rational& q, Precision prec) {
  const Rational two_q = Rational(2) * q;
  return CNum(cos_pi(two_q, prec), sin_pi(two_q, prec));
}

// ---------------------------------------------------------------- Tolerance

Tolerance Tolerance::for_precision(Precision prec) {
  return {exp2i(48 - prec, prec), exp2i(48 - prec, prec)};
}

Tolerance Tolerance::from_log2(long abs_log2, long rel_log2, Precision prec) {
  return {exp2i(abs_log2, prec), exp2i(rel_log2, prec)};
}

Real Tolerance::bound(const Real& a_mag, const Real& b_mag) const {
  return abs_eps + rel_eps * max(a_mag, b_mag);
}

CNum rational_to_cnum(const Rational& x, Precision prec) {
  if (prec < kMinPrecision) throw DomainError("precision must be at least 53 bits");
  return CNum(Real(x, prec), Real(prec));
}

bool approx_eq(const CNum& a, const CNum& b, const Tolerance& tol) {
  return (a - b).abs() <= tol.bound(a.abs(), b.abs());
}

bool approx_eq(const Real& a, const Real& b, const Tolerance& tol) {
  return abs(a - b) <= tol.bound(abs(a), abs(b));
}

int display_digits(Precision prec) {
  return std::max(6, static_cast<int>(std::floor(static_cast<double>(prec - 16) * 0.30102999566398120)));
}

}  // namespace cyclespec
