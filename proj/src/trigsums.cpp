#include "cyclespec/trigsums.hpp"

#include <stdexcept>
#include <type_traits>
#include <utility>

#include "cyclespec/chebyshev.hpp"

namespace cyclespec {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Gaussian rationals: exact arithmetic for phases in {1, i, -1, -i}.
struct QI {
  Rational re;
  Rational im;
};

QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
QI operator*(const QI& a, const QI& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QI operator/(const QI& a, const QI& b) {
  const Rational n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw DomainError("exact division by zero in series expansion");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

bool quarter(const Rational& q) { return (Rational(4) * q).is_integer(); }

template <class S>
struct Field;

template <>
struct Field<QI> {
  static QI from(const Rational& x, Precision) { return {x, Rational()}; }
  static QI root(const Rational& q, Precision) {
    const Rational f = Rational(4) * q;
    if (!f.is_integer()) throw std::logic_error("exact root of unity needs a quarter-integer");
    switch (mod(Integer(f.numerator() % 4).get_si(), 4)) {
      case 0: return {Rational(1), Rational()};
      case 1: return {Rational(), Rational(1)};
      case 2: return {Rational(-1), Rational()};
      default: return {Rational(), Rational(-1)};
    }
  }
  static QI cos2pi(const Rational& q, Precision p) { return {root(q, p).re, Rational()}; }
  static bool is_zero(const QI& x) { return x.re.is_zero() && x.im.is_zero(); }
  static CNum to_cnum(const QI& x, Precision p) { return CNum(Real(x.re, p), Real(x.im, p)); }
};

template <>
struct Field<CNum> {
  static CNum from(const Rational& x, Precision p) { return rational_to_cnum(x, p); }
  static CNum root(const Rational& q, Precision p) { return unit_root(q, p); }
  static CNum cos2pi(const Rational& q, Precision p) {
    return CNum(cos_pi(Rational(2) * q, p));
  }
  static bool is_zero(const CNum& x) { return x.is_zero(); }
  static CNum to_cnum(const CNum& x, Precision p) {
    return CNum(x.re().with_precision(p), x.im().with_precision(p));
  }
};

template <class S>
std::vector<S> quotient(const std::vector<S>& num, const std::vector<S>& den, long count,
                        Precision p) {
  if (den.empty() || Field<S>::is_zero(den[0])) {
    throw DomainError("series denominator vanishes at the expansion point");
  }
  std::vector<S> q;
  q.reserve(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) {
    S acc = n < static_cast<long>(num.size()) ? num[n] : Field<S>::from(Rational(), p);
    for (long k = 1; k <= n && k < static_cast<long>(den.size()); ++k) {
      acc = acc - den[k] * q[n - k];
    }
    q.push_back(acc / den[0]);
  }
  return q;
}

enum class Route { polynomial, closed_form };

struct ChebData {
  std::vector<Rational> a;  // U_{m-ell-1} part
  std::vector<Rational> b;  // U_{ell-1} part
  std::vector<Rational> d;  // T_m part
};

// Coefficients of U_{m-ell-1}, U_{ell-1}, T_m in powers of (z-1).
ChebData shifted_data(Route route, long m, long ell, long count) {
  ChebData out;
  if (route == Route::polynomial) {
    const Poly a = cheb_u(m - ell - 1).taylor_shift(Rational(1));
    const Poly b = cheb_u(ell - 1).taylor_shift(Rational(1));
    const Poly d = cheb_t(m).taylor_shift(Rational(1));
    for (long k = 0; k < count; ++k) {
      out.a.push_back(a.coeff(static_cast<std::size_t>(k)));
      out.b.push_back(b.coeff(static_cast<std::size_t>(k)));
      out.d.push_back(d.coeff(static_cast<std::size_t>(k)));
    }
  } else {
    for (long k = 0; k < count; ++k) {
      out.a.push_back(shifted_u_or_zero(m - ell - 1, k));
      out.b.push_back(shifted_u_or_zero(ell - 1, k));
      out.d.push_back(shifted_t_or_zero(m, k));
    }
  }
  return out;
}

// Coefficients of the same polynomials in powers of z.
ChebData monomial_data(Route route, long m, long ell, long count) {
  ChebData out;
  for (long k = 0; k < count; ++k) {
    if (route == Route::polynomial) {
      out.a.push_back(cheb_u(m - ell - 1).coeff(static_cast<std::size_t>(k)));
      out.b.push_back(cheb_u(ell - 1).coeff(static_cast<std::size_t>(k)));
      out.d.push_back(cheb_t(m).coeff(static_cast<std::size_t>(k)));
    } else {
      out.a.push_back(monomial_u_or_zero(m - ell - 1, k));
      out.b.push_back(monomial_u_or_zero(ell - 1, k));
      out.d.push_back(monomial_t_or_zero(m, k));
    }
  }
  return out;
}

// Series coefficients of (A + e^{2 pi i q} B)/(D - cos 2 pi q).
template <class S>
std::vector<S> cheb_quotient(const ChebData& data, const Rational& q, long count, Precision p) {
  const S e = Field<S>::root(q, p);
  const S c = Field<S>::cos2pi(q, p);
  std::vector<S> num;
  std::vector<S> den;
  for (long k = 0; k < count; ++k) {
    num.push_back(Field<S>::from(data.a[k], p) + e * Field<S>::from(data.b[k], p));
    S dk = Field<S>::from(data.d[k], p);
    if (k == 0) dk = dk - c;
    den.push_back(std::move(dk));
  }
  return quotient(num, den, count, p);
}

// x * e^{2 pi i phase}, exact when possible.
template <class S>
SumValue finish(const S& x, const Rational& phase, Precision p) {
  if constexpr (std::is_same_v<S, QI>) {
    if (quarter(phase)) {
      const QI y = x * Field<QI>::root(phase, p);
      SumValue out{Field<QI>::to_cnum(y, p), std::nullopt};
      if (y.im.is_zero()) out.exact = y.re;
      return out;
    }
    const CNum v = Field<QI>::to_cnum(x, p + 16) * unit_root(phase, p + 16);
    return {Field<CNum>::to_cnum(v, p), std::nullopt};
  } else {
    const CNum v = x * unit_root(phase, x.precision());
    return {Field<CNum>::to_cnum(v, p), std::nullopt};
  }
}

Rational signed_power_of_two(long n) {
  // (-1)^n 2^{n+1}
  const Rational v = pow(Rational(2), static_cast<unsigned long>(n + 1));
  return n % 2 == 0 ? v : -v;
}

template <class S>
std::vector<SumValue> shifted_values(const ChebData& data, long m, long ell, const Rational& beta,
                                     long count, Precision p) {
  const Precision w = p + 64;
  const std::vector<S> q = cheb_quotient<S>(data, beta, count, w);
  std::vector<SumValue> out;
  const Rational phase = -beta * Rational(ell) / Rational(m);
  for (long n = 0; n < count; ++n) {
    out.push_back(finish(q[n] * Field<S>::from(signed_power_of_two(n), w), phase, p));
  }
  return out;
}

std::vector<SumValue> shifted_cosecant(Route route, long m, long r, const Rational& beta,
                                       long count, Precision p) {
  if (m < 2) throw DomainError("sums require m >= 2");
  if (beta.is_integer()) throw DomainError("cosecant sum requires a non-integral shift beta");
  if (count <= 0) return {};
  const long ell = mod(r, m);
  const ChebData data = shifted_data(route, m, ell, count);
  if (quarter(beta)) return shifted_values<QI>(data, m, ell, beta, count, p);
  return shifted_values<CNum>(data, m, ell, beta, count, p);
}

template <class S>
std::vector<SumValue> double_values(const ChebData& data, long m, long ell, const Rational& alpha,
                                    long count, Precision p) {
  const Precision w = p + 64;
  const std::vector<S> q = cheb_quotient<S>(data, alpha, count, w);
  std::vector<SumValue> out;
  const Rational phase = -alpha * Rational(ell) / Rational(m);
  for (long n = 0; n < count; ++n) {
    out.push_back(finish(q[n] * Field<S>::from(Rational(-1), w), phase, p));
  }
  return out;
}

void check_secant_double(long m, const Rational& alpha) {
  if (m % 4 == 0 && alpha.is_integer()) {
    throw DomainError("secant_double with m divisible by 4 requires a non-integral alpha");
  }
  if (m % 4 == 2 && (alpha - Rational(1, 2)).is_integer()) {
    throw DomainError("secant_double with m = 2 mod 4 requires alpha not in Z + 1/2");
  }
  if (m % 2 == 1 && (Rational(2) * alpha - Rational(1, 2)).is_integer()) {
    throw DomainError("secant_double with odd m requires 2 alpha not in Z + 1/2");
  }
}

void check_cosecant_double(long m, const Rational& beta) {
  if (m % 2 == 1 && (Rational(2) * beta).is_integer()) {
    throw DomainError("cosecant_double with odd m requires 2 beta not an integer");
  }
  if (m % 2 == 0 && beta.is_integer()) {
    throw DomainError("cosecant_double with even m requires a non-integral beta");
  }
}

std::vector<SumValue> secant_double_values(Route route, long m, long r, const Rational& alpha,
                                           long count, Precision p) {
  check_secant_double(m, alpha);
  if (count <= 0) return {};
  const long ell = mod(r, m);
  const ChebData data = monomial_data(route, m, ell, count);
  if (quarter(alpha)) return double_values<QI>(data, m, ell, alpha, count, p);
  return double_values<CNum>(data, m, ell, alpha, count, p);
}

// csc^n(2 pi j/m) averaged over j not in {0, m/2}: the alpha = -m/4 secant function with
// the pole contributions of the excluded indices removed at z = 0.
std::vector<SumValue> cosecant_double_noshift_values(Route route, long m, long r, long count,
                                                     Precision p) {
  if (count <= 0) return {};
  const long ell = mod(r, m);
  const Rational alpha(Integer(-m), Integer(4));
  const long len = count + 4;
  const ChebData data = monomial_data(route, m, ell, len);
  const QI e = Field<QI>::root(alpha, p);
  const QI c = Field<QI>::cos2pi(alpha, p);
  const QI pre = Field<QI>::root(-alpha * Rational(ell) / Rational(m), p);
  Rational excluded(1);
  if (m % 2 == 0) excluded += ell % 2 == 0 ? Rational(1) : Rational(-1);
  const QI E{excluded / Rational(m), Rational()};

  std::vector<QI> n_series;
  std::vector<QI> d_series;
  for (long k = 0; k < len; ++k) {
    n_series.push_back(pre * (QI{data.a[k], Rational()} + e * QI{data.b[k], Rational()}));
    QI dk{data.d[k], Rational()};
    if (k == 0) dk = dk - c;
    d_series.push_back(dk);
  }
  // (z N - E D) / (z D)
  std::vector<QI> num;
  std::vector<QI> den;
  const QI zero{Rational(), Rational()};
  for (long k = 0; k < len; ++k) {
    num.push_back((k > 0 ? n_series[k - 1] : zero) - E * d_series[k]);
    den.push_back(k > 0 ? d_series[k - 1] : zero);
  }
  while (!den.empty() && Field<QI>::is_zero(den.front())) {
    if (!Field<QI>::is_zero(num.front())) {
      throw std::logic_error("excluded-index subtraction left a pole at z = 0");
    }
    num.erase(num.begin());
    den.erase(den.begin());
  }
  if (static_cast<long>(den.size()) < count) throw std::logic_error("series too short");
  const std::vector<QI> g = quotient(num, den, count, p);
  std::vector<SumValue> out;
  for (long n = 0; n < count; ++n) {
    out.push_back(finish(g[n] * QI{Rational(-1), Rational()}, Rational(), p));
  }
  return out;
}

bool is_noshift(SumKind k) {
  return k == SumKind::cosecant_noshift || k == SumKind::secant_noshift ||
         k == SumKind::cosecant_double_noshift;
}

}  // namespace

const char* to_string(SumKind kind) {
  switch (kind) {
    case SumKind::cosecant: return "cosecant";
    case SumKind::secant: return "secant";
    case SumKind::cosecant_double: return "cosecant_double";
    case SumKind::secant_double: return "secant_double";
    case SumKind::cosecant_noshift: return "cosecant_noshift";
    case SumKind::secant_noshift: return "secant_noshift";
    case SumKind::cosecant_double_noshift: return "cosecant_double_noshift";
    case SumKind::cotangent: return "cotangent";
    case SumKind::tangent: return "tangent";
    case SumKind::alternating_cosecant: return "alternating_cosecant";
  }
  return "?";
}

SumKind parse_sum_kind(const std::string& name) {
  for (SumKind k : {SumKind::cosecant, SumKind::secant, SumKind::cosecant_double,
                    SumKind::secant_double, SumKind::cosecant_noshift, SumKind::secant_noshift,
                    SumKind::cosecant_double_noshift, SumKind::cotangent, SumKind::tangent,
                    SumKind::alternating_cosecant}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown sum kind '" + name + "'");
}

bool is_double_kind(SumKind kind) {
  return kind == SumKind::cosecant_double || kind == SumKind::secant_double ||
         kind == SumKind::cosecant_double_noshift;
}

const char* to_string(SumMethod method) {
  switch (method) {
    case SumMethod::direct: return "direct";
    case SumMethod::generating_function: return "generating_function";
    case SumMethod::recurrence: return "recurrence";
  }
  return "?";
}

void validate(const SumSpec& spec) {
  const long m = spec.m;
  const Rational& s = spec.shift;
  if (m < 2) throw DomainError("sums require m >= 2");
  if (spec.power < 1) throw DomainError("sums require a positive power n");
  if (is_noshift(spec.kind) && !s.is_zero()) {
    throw DomainError(std::string(to_string(spec.kind)) + " takes no shift (shift must be 0)");
  }
  const Rational half_m(Integer(m), Integer(2));
  switch (spec.kind) {
    case SumKind::cosecant:
      if (s.is_integer()) throw DomainError("cosecant sum requires a non-integral shift beta");
      break;
    case SumKind::secant:
      if ((s - half_m).is_integer()) throw DomainError("secant sum requires alpha - m/2 not an integer");
      break;
    case SumKind::cosecant_double: check_cosecant_double(m, s); break;
    case SumKind::secant_double: check_secant_double(m, s); break;
    case SumKind::cotangent:
      if (s.is_integer() && !s.is_zero()) {
        throw DomainError("cotangent sum requires a non-integral beta, or beta = 0");
      }
      break;
    case SumKind::tangent:
      if ((s - half_m).is_integer() && !s.is_zero()) {
        throw DomainError("tangent sum requires alpha - m/2 not an integer, or alpha = 0");
      }
      break;
    case SumKind::alternating_cosecant:
      if (m % 2 != 0) throw DomainError("alternating cosecant sum requires even m");
      if (s.is_integer() && !s.is_zero()) {
        throw DomainError("alternating cosecant sum requires a non-integral beta, or beta = 0");
      }
      break;
    default: break;
  }
}

namespace {

enum class Trig { csc, sec, cot, tan };

struct DirectPlan {
  Trig trig;
  Rational scale;  // argument = pi * scale * (j + shift)
  long exponent;
  bool averaged;
  bool alternating;
  std::vector<long> excluded;
};

DirectPlan plan_for(const SumSpec& spec) {
  const long m = spec.m;
  const long n = spec.power;
  const Rational single(Integer(1), Integer(m));
  const Rational dbl(Integer(2), Integer(m));
  DirectPlan plan{Trig::csc, single, 2 * n, true, false, {}};
  switch (spec.kind) {
    case SumKind::cosecant: break;
    case SumKind::secant: plan.trig = Trig::sec; break;
    case SumKind::cosecant_double: plan.scale = dbl; plan.exponent = n; break;
    case SumKind::secant_double: plan.trig = Trig::sec; plan.scale = dbl; plan.exponent = n; break;
    case SumKind::cosecant_noshift: plan.excluded = {0}; break;
    case SumKind::secant_noshift:
      plan.trig = Trig::sec;
      if (m % 2 == 0) plan.excluded = {m / 2};
      break;
    case SumKind::cosecant_double_noshift:
      plan.scale = dbl;
      plan.exponent = n;
      plan.excluded = {0};
      if (m % 2 == 0) plan.excluded.push_back(m / 2);
      break;
    case SumKind::cotangent:
      plan.trig = Trig::cot;
      if (spec.shift.is_zero()) plan.excluded = {0};
      break;
    case SumKind::tangent:
      plan.trig = Trig::tan;
      if (spec.shift.is_zero() && m % 2 == 0) plan.excluded = {m / 2};
      break;
    case SumKind::alternating_cosecant:
      plan.averaged = false;
      plan.alternating = true;
      if (spec.shift.is_zero()) plan.excluded = {0};
      break;
  }
  return plan;
}

struct DirectPass {
  CNum value;
  Real min_denominator;
};

DirectPass direct_pass(const SumSpec& spec, const DirectPlan& plan, Precision w) {
  const long m = spec.m;
  CNum sum(w);
  Real min_den(1L, w);
  for (long j = 0; j < m; ++j) {
    bool skip = false;
    for (long e : plan.excluded) skip = skip || e == j;
    if (skip) continue;
    const Rational q = plan.scale * (Rational(j) + spec.shift);
    const Real s = sin_pi(q, w);
    const Real c = cos_pi(q, w);
    const Real& den = (plan.trig == Trig::csc || plan.trig == Trig::cot) ? s : c;
    if (den.is_zero()) throw DomainError("singular summand at j = " + std::to_string(j));
    if (abs(den) < min_den) min_den = abs(den);
    Real base(w);
    switch (plan.trig) {
      case Trig::csc: base = Real(1L, w) / s; break;
      case Trig::sec: base = Real(1L, w) / c; break;
      case Trig::cot: base = c / s; break;
      case Trig::tan: base = s / c; break;
    }
    const Real term = pow(base, plan.exponent);
    if (plan.alternating) {
      sum += CNum(j % 2 == 0 ? term : -term);
    } else {
      sum += unit_root(Rational(Integer(j * mod(spec.r, m)), Integer(m)), w) * term;
    }
  }
  if (plan.averaged) sum /= Real(m, w);
  return {sum, min_den};
}

}  // namespace

SumResult direct_sum(const SumSpec& spec, Precision prec) {
  validate(spec);
  const DirectPlan plan = plan_for(spec);
  const Real guard = exp2i(-16, 64);
  DirectPass pass = direct_pass(spec, plan, prec + 16);
  if (pass.min_denominator < guard) {
    pass = direct_pass(spec, plan, 2 * prec + 16);
    if (pass.min_denominator < guard) {
      pass = direct_pass(spec, plan, 4 * prec + 16);
      if (pass.min_denominator < exp2i(48 - prec, 64)) {
        throw DomainError("near-singular summand: a sine/cosine is below the absolute tolerance");
      }
    }
  }
  return {spec, Field<CNum>::to_cnum(pass.value, prec), std::nullopt, SumMethod::direct};
}

std::vector<SumValue> coeffs_from_generating_function(long m, long r, const Rational& beta,
                                                      long count, Precision prec) {
  return shifted_cosecant(Route::polynomial, m, r, beta, count, prec);
}

std::vector<SumValue> recurrence_shifted(long m, long r, const Rational& beta, long count,
                                         Precision prec) {
  return shifted_cosecant(Route::closed_form, m, r, beta, count, prec);
}

std::vector<Rational> recurrence_unshifted(long m, long r, long count) {
  if (m < 2) throw DomainError("sums require m >= 2");
  const long ell = mod(r, m);
  const Rational a1 = shifted_t_coeff(m, 1);
  std::vector<Rational> c;
  for (long n = 0; n < count; ++n) {
    Rational rhs = shifted_u_or_zero(m - ell - 1, n + 1) + shifted_u_or_zero(ell - 1, n + 1) -
                   shifted_t_or_zero(m, n + 2) / Rational(m);
    for (long j = 1; j <= n; ++j) rhs -= shifted_t_or_zero(m, j + 1) * c[n - j];
    c.push_back(rhs / a1);
  }
  return c;
}

std::vector<Rational> cosecant_noshift_values(long m, long r, long count) {
  const std::vector<Rational> c = recurrence_unshifted(m, r, count);
  std::vector<Rational> out;
  for (long n = 0; n < count; ++n) out.push_back(signed_power_of_two(n) * c[n]);
  return out;
}

std::vector<SumValue> secant_coeffs(long m, long r, const Rational& alpha, long count,
                                    Precision prec) {
  const Rational beta = alpha - Rational(Integer(m), Integer(2));
  if (beta.is_integer()) throw DomainError("secant sum requires alpha - m/2 not an integer");
  return coeffs_from_generating_function(m, r, beta, count, prec);
}

std::vector<Rational> secant_noshift_values(long m, long r, long count) {
  if (m < 2) throw DomainError("sums require m >= 2");
  if (m % 2 == 0) {
    std::vector<Rational> out = cosecant_noshift_values(m, r, count);
    if (mod(r, m) % 2 == 1) {
      for (auto& v : out) v = -v;
    }
    return out;
  }
  std::vector<Rational> out;
  for (const SumValue& v : secant_coeffs(m, r, Rational(), count, kDefaultPrecision)) {
    if (!v.exact) throw std::logic_error("odd-m secant sum did not reduce to a rational");
    out.push_back(*v.exact);
  }
  return out;
}

std::vector<SumValue> double_arg_coeffs(SumKind kind, long m, long r, const Rational& shift,
                                        long count, Precision prec) {
  if (m < 2) throw DomainError("sums require m >= 2");
  switch (kind) {
    case SumKind::secant_double:
      return secant_double_values(Route::closed_form, m, r, shift, count, prec);
    case SumKind::cosecant_double:
      check_cosecant_double(m, shift);
      return secant_double_values(Route::closed_form, m, r,
                                  shift - Rational(Integer(m), Integer(4)), count, prec);
    case SumKind::cosecant_double_noshift:
      if (!shift.is_zero()) throw DomainError("cosecant_double_noshift takes no shift");
      return cosecant_double_noshift_values(Route::closed_form, m, r, count, prec);
    default:
      throw DomainError(std::string("double_arg_coeffs does not handle kind ") + to_string(kind));
  }
}

SumResult cot_tan_sum(const SumSpec& spec, Precision prec) {
  if (spec.kind != SumKind::cotangent && spec.kind != SumKind::tangent) {
    throw DomainError("cot_tan_sum requires kind cotangent or tangent");
  }
  validate(spec);
  const long m = spec.m;
  const long ell = mod(spec.r, m);
  const long n = spec.power;
  const Rational base = ell == 0 ? Rational(1) : Rational();
  std::vector<SumValue> powers;
  Rational zeroth = base;
  bool shifted = true;
  if (spec.kind == SumKind::cotangent) {
    if (spec.shift.is_zero()) {
      shifted = false;
      zeroth -= Rational(Integer(1), Integer(m));
    }
  } else if (spec.shift.is_zero() && m % 2 == 0) {
    shifted = false;
    zeroth -= Rational(Integer(ell % 2 == 0 ? 1 : -1), Integer(m));
  }
  if (shifted) {
    powers = spec.kind == SumKind::cotangent ? coeffs_from_generating_function(m, spec.r, spec.shift, n, prec)
                                             : secant_coeffs(m, spec.r, spec.shift, n, prec);
  } else {
    const std::vector<Rational> exact = spec.kind == SumKind::cotangent
                                            ? cosecant_noshift_values(m, spec.r, n)
                                            : secant_noshift_values(m, spec.r, n);
    for (const Rational& v : exact) powers.push_back({rational_to_cnum(v, prec), v});
  }
  CNum value(prec);
  std::optional<Rational> exact = Rational();
  for (long k = 0; k <= n; ++k) {
    Rational coeff = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if ((n - k) % 2 == 1) coeff = -coeff;
    if (k == 0) {
      value += rational_to_cnum(coeff * zeroth, prec);
      if (exact) *exact += coeff * zeroth;
    } else {
      const SumValue& v = powers[k - 1];
      value += v.value * Real(coeff, prec);
      if (exact && v.exact) {
        *exact += coeff * *v.exact;
      } else {
        exact.reset();
      }
    }
  }
  if (exact) value = rational_to_cnum(*exact, prec);
  return {spec, value, exact, shifted ? SumMethod::generating_function : SumMethod::recurrence};
}

SumValue alternating_sum(long m, const Rational& beta, long n, Precision prec) {
  if (m % 2 != 0) throw DomainError("alternating cosecant sum requires even m");
  if (n < 1) throw DomainError("sums require a positive power n");
  if (beta.is_zero()) {
    const Rational v = Rational(m) * cosecant_noshift_values(m, m / 2, n)[n - 1];
    return {rational_to_cnum(v, prec), v};
  }
  if (beta.is_integer()) {
    throw DomainError("alternating cosecant sum requires a non-integral beta, or beta = 0");
  }
  SumValue v = coeffs_from_generating_function(m, m / 2, beta, n, prec)[n - 1];
  v.value *= Real(m, prec);
  if (v.exact) *v.exact *= Rational(m);
  return v;
}

SumResult closed_sum(const SumSpec& spec, Precision prec) {
  validate(spec);
  const long m = spec.m;
  const long n = spec.power;
  auto pack = [&](const SumValue& v, SumMethod method) {
    return SumResult{spec, v.value, v.exact, method};
  };
  auto pack_exact = [&](const Rational& v) {
    return SumResult{spec, rational_to_cnum(v, prec), v, SumMethod::recurrence};
  };
  switch (spec.kind) {
    case SumKind::cosecant:
      return pack(coeffs_from_generating_function(m, spec.r, spec.shift, n, prec)[n - 1],
                  SumMethod::generating_function);
    case SumKind::secant:
      return pack(secant_coeffs(m, spec.r, spec.shift, n, prec)[n - 1],
                  SumMethod::generating_function);
    case SumKind::cosecant_double:
    case SumKind::secant_double:
    case SumKind::cosecant_double_noshift:
      return pack(double_arg_coeffs(spec.kind, m, spec.r, spec.shift, n, prec)[n - 1],
                  SumMethod::recurrence);
    case SumKind::cosecant_noshift: return pack_exact(cosecant_noshift_values(m, spec.r, n)[n - 1]);
    case SumKind::secant_noshift: return pack_exact(secant_noshift_values(m, spec.r, n)[n - 1]);
    case SumKind::cotangent:
    case SumKind::tangent: return cot_tan_sum(spec, prec);
    case SumKind::alternating_cosecant:
      return pack(alternating_sum(m, spec.shift, n, prec), spec.shift.is_zero()
                                                               ? SumMethod::recurrence
                                                               : SumMethod::generating_function);
  }
  throw std::logic_error("unhandled sum kind");
}

// ---------------------------------------------------------------- Chu-Marini

const char* to_string(ChuMariniVariant variant) {
  switch (variant) {
    case ChuMariniVariant::csc: return "csc";
    case ChuMariniVariant::csc_alt: return "csc_alt";
    case ChuMariniVariant::shifted: return "shifted";
  }
  return "?";
}

namespace {

template <class T>
std::vector<T> ser_mul(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  std::vector<T> out(a.size(), zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class T>
std::vector<T> ser_div(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  std::vector<T> out(a.size(), zero);
  for (std::size_t n = 0; n < a.size(); ++n) {
    T acc = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) acc -= b[k] * out[n - k];
    out[n] = acc / b[0];
  }
  return out;
}

// sum_k c_k u^k for u with zero constant term.
template <class T>
std::vector<T> ser_compose(const std::vector<T>& c, const std::vector<T>& u, const T& zero) {
  std::vector<T> out(u.size(), zero);
  for (std::size_t k = c.size(); k-- > 0;) {
    out = ser_mul(out, u, zero);
    out[0] += c[k];
  }
  return out;
}

template <class T, class F>
std::vector<T> convert(const std::vector<Rational>& v, F f) {
  std::vector<T> out;
  for (const Rational& x : v) out.push_back(f(x));
  return out;
}

}  // namespace

std::vector<ChuMariniRow> chu_marini_check(long m, long count, ChuMariniVariant variant,
                                           const Rational& beta, Precision prec) {
  if (m < 2) throw DomainError("generating-function check requires m >= 2");
  if (variant == ChuMariniVariant::csc_alt && m % 2 != 0) {
    throw DomainError("csc_alt generating function requires even m");
  }
  if (variant == ChuMariniVariant::shifted && beta.is_integer()) {
    throw DomainError("shifted generating function requires a non-integral beta");
  }
  const std::size_t len = static_cast<std::size_t>(2 * count + 3);
  const long kmax = count + 2;

  // arcsin(y)/y and 1/sqrt(1-y^2) as series in y.
  std::vector<Rational> asin_over_y(len), inv_sqrt(len);
  for (std::size_t k = 0; 2 * k < len; ++k) {
    const Rational c = binomial(2 * k, k) / pow(Rational(4), k);
    inv_sqrt[2 * k] = c;
    asin_over_y[2 * k] = c / Rational(static_cast<long>(2 * k + 1));
  }
  // u = x^2 with x = m arcsin(y).
  std::vector<Rational> y2(len);
  y2[2] = Rational(1);
  const std::vector<Rational> u =
      ser_mul(ser_mul(y2, ser_mul(asin_over_y, asin_over_y, Rational()), Rational()),
              std::vector<Rational>{Rational(m * m)}, Rational());
  std::vector<Rational> cos_c, sinc_c;
  for (long k = 0; k <= kmax; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    cos_c.push_back(sign / factorial(static_cast<unsigned long>(2 * k)));
    sinc_c.push_back(sign / factorial(static_cast<unsigned long>(2 * k + 1)));
  }

  std::vector<CNum> series;
  std::vector<CNum> module;
  if (variant != ChuMariniVariant::shifted) {
    const std::vector<Rational> sinc_u = ser_compose(sinc_c, u, Rational());
    std::vector<Rational> f = ser_div(inv_sqrt, ser_mul(asin_over_y, sinc_u, Rational()), Rational());
    if (variant == ChuMariniVariant::csc) f = ser_mul(f, ser_compose(cos_c, u, Rational()), Rational());
    std::vector<Rational> gf(len);
    gf[0] = Rational(1);
    for (std::size_t k = 0; k < len; ++k) gf[k] -= f[k];
    const long r = variant == ChuMariniVariant::csc ? 0 : m / 2;
    const std::vector<Rational> vals = cosecant_noshift_values(m, r, count);
    for (long n = 1; n <= count; ++n) {
      series.push_back(rational_to_cnum(gf[static_cast<std::size_t>(2 * n)], prec));
      module.push_back(rational_to_cnum(Rational(m) * vals[n - 1], prec));
    }
  } else {
    const Precision w = prec + 32;
    auto to_real = [w](const Rational& x) { return Real(x, w); };
    const Real zero(w);
    std::vector<Rational> v = u;
    for (auto& x : v) x *= Rational(4);
    const std::vector<Real> sinc_v = ser_compose(convert<Real>(sinc_c, to_real), convert<Real>(v, to_real), zero);
    std::vector<Real> den = ser_compose(convert<Real>(cos_c, to_real), convert<Real>(v, to_real), zero);
    den[0] -= cos_pi(Rational(2) * beta, w);
    std::vector<Real> num = ser_mul(convert<Real>(asin_over_y, to_real), convert<Real>(inv_sqrt, to_real), zero);
    num = ser_mul(num, sinc_v, zero);
    std::vector<Real> shifted(len, zero);
    for (std::size_t k = 0; k + 2 < len; ++k) shifted[k + 2] = num[k] * Real(2L * m * m, w);
    const std::vector<Real> gf = ser_div(shifted, den, zero);
    const std::vector<SumValue> vals = coeffs_from_generating_function(m, 0, beta, count, prec);
    for (long n = 1; n <= count; ++n) {
      series.push_back(CNum(gf[static_cast<std::size_t>(2 * n)].with_precision(prec)));
      module.push_back(vals[n - 1].value * Real(m, prec));
    }
  }
  std::vector<ChuMariniRow> rows;
  for (long n = 1; n <= count; ++n) {
    Real delta = (series[n - 1] - module[n - 1]).abs();
    rows.push_back({n, series[n - 1], module[n - 1], delta});
  }
  return rows;
}

}  // namespace cyclespec
