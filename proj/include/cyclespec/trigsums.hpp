#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclespec/numeric.hpp"

namespace cyclespec {

enum class SumKind {
  cosecant,
  secant,
  cosecant_double,
  secant_double,
  cosecant_noshift,
  secant_noshift,
  cosecant_double_noshift,
  cotangent,
  tangent,
  alternating_cosecant,
};

const char* to_string(SumKind kind);
/// Throws std::invalid_argument for unknown names.
SumKind parse_sum_kind(const std::string& name);
/// Double-argument kinds use exponent n; the others use 2n.
bool is_double_kind(SumKind kind);

enum class SumMethod { direct, generating_function, recurrence };
const char* to_string(SumMethod method);

/// One twisted sum. Every kind except alternating_cosecant is averaged by 1/m:
///   cosecant                 (1/m) sum_{j=0}^{m-1} csc^{2n}(pi (j+beta)/m) w^j,  w = e^{2 pi i r/m}
///   secant                   (1/m) sum_{j=0}^{m-1} sec^{2n}(pi (j+alpha)/m) w^j
///   cosecant_double          (1/m) sum_{j=0}^{m-1} csc^{n}(2 pi (j+beta)/m) w^j
///   secant_double            (1/m) sum_{j=0}^{m-1} sec^{n}(2 pi (j+alpha)/m) w^j
///   cosecant_noshift         cosecant at beta = 0 without j = 0
///   secant_noshift           secant at alpha = 0 without j = m/2 (m even)
///   cosecant_double_noshift  cosecant_double at beta = 0 without j = 0, m/2
///   cotangent, tangent       cot^{2n}, tan^{2n}; shift 0 drops the singular index
///   alternating_cosecant     sum_j (-1)^j csc^{2n}(pi (j+beta)/m), m even, not averaged
struct SumSpec {
  SumKind kind = SumKind::cosecant;
  long m = 2;
  long r = 0;
  Rational shift;
  long power = 1;
};

struct SumResult {
  SumSpec spec;
  CNum value;
  /// Present when the value is an exact rational.
  std::optional<Rational> exact;
  SumMethod method = SumMethod::direct;
};

/// Throws DomainError naming the violated condition.
void validate(const SumSpec& spec);

/// Literal evaluation of the defining sum.
SumResult direct_sum(const SumSpec& spec, Precision prec);
/// Closed-form evaluation (generating function or recurrence, depending on kind).
SumResult closed_sum(const SumSpec& spec, Precision prec);

/// Value of an averaged sum together with exactness information.
struct SumValue {
  CNum value;
  std::optional<Rational> exact;
};

/// C_{m,r}(beta, n+1), n = 0..count-1, from the Taylor expansion of the Chebyshev
/// generating function at s = 0. Requires beta not an integer.
std::vector<SumValue> coeffs_from_generating_function(long m, long r, const Rational& beta,
                                                      long count, Precision prec);
/// Same values from the triangular recurrence with closed-form shifted coefficients.
std::vector<SumValue> recurrence_shifted(long m, long r, const Rational& beta, long count,
                                         Precision prec);
/// Exact c_{m,r}(n), n = 0..count-1; C_{m,r}(n+1) = (-1)^n 2^{n+1} c_{m,r}(n).
std::vector<Rational> recurrence_unshifted(long m, long r, long count);
/// Exact C_{m,r}(n+1) (j = 0 excluded), n = 0..count-1.
std::vector<Rational> cosecant_noshift_values(long m, long r, long count);

/// S_{m,r}(alpha, n+1), n = 0..count-1. Requires alpha - m/2 not an integer.
std::vector<SumValue> secant_coeffs(long m, long r, const Rational& alpha, long count,
                                    Precision prec);
/// Exact S_{m,r}(n+1) (j = m/2 excluded for even m).
std::vector<Rational> secant_noshift_values(long m, long r, long count);

/// Values at powers 1..count for secant_double, cosecant_double or cosecant_double_noshift.
std::vector<SumValue> double_arg_coeffs(SumKind kind, long m, long r, const Rational& shift,
                                        long count, Precision prec);

/// Cotangent/tangent sums through the binomial reduction to csc/sec sums.
SumResult cot_tan_sum(const SumSpec& spec, Precision prec);

/// sum_j (-1)^j csc^{2n}(pi (j+beta)/m) for even m (beta = 0 skips j = 0).
SumValue alternating_sum(long m, const Rational& beta, long n, Precision prec);

enum class ChuMariniVariant { csc, csc_alt, shifted };
const char* to_string(ChuMariniVariant variant);

struct ChuMariniRow {
  long n;
  CNum series_coeff;  // coefficient of y^{2n} of the classical generating function
  CNum module_value;  // the same sum from this library
  Real delta;
};

/// Expands the classical generating function in y by exact series composition and
/// compares the y^{2n} coefficients with this module's values, n = 1..count.
std::vector<ChuMariniRow> chu_marini_check(long m, long count, ChuMariniVariant variant,
                                           const Rational& beta, Precision prec);

}  // namespace cyclespec
