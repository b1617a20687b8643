#pragma once

#include <vector>

#include "cyclespec/numeric.hpp"
#include "cyclespec/poly.hpp"

namespace cyclespec {

/// kernel:    G(x,y;s) = (1/m) sum_j e^{2 pi i (j+beta) r/m} / (s + lambda_j), r = x - y.
/// cancelled: F_{m,r}(s,beta) = e^{-2 pi i beta r/m} G, the Chebyshev normalization.
enum class ResolventNorm { kernel, cancelled };

struct ResolventClosedForm {
  long m;
  long ell;
  Rational beta;
  Poly numerator_u_high;  // U_{m-ell-1}
  Poly numerator_u_low;   // U_{ell-1}
  Poly denominator;       // T_m
  CNum cos_term;          // cos 2 pi beta
  CNum prefactor;         // e^{-2 pi i beta ell/m}
};

ResolventClosedForm resolvent_closed_form(long m, const Rational& beta, long r, Precision prec);

/// Spectral partial-fraction sum. With exclude_zero_mode the j = 0 term is dropped
/// (the beta = 0 regularization). Throws PoleError naming j when s is within
/// abs_eps of -lambda_j.
CNum resolvent_spectral(long m, const Rational& beta, long r, const CNum& s,
                        ResolventNorm norm = ResolventNorm::kernel, bool exclude_zero_mode = false);

/// Chebyshev form e^{-2 pi i beta ell/m} (U_{m-ell-1}(s+1) + e^{2 pi i beta} U_{ell-1}(s+1))
/// / (T_m(s+1) - cos 2 pi beta).
CNum resolvent_closed(long m, const Rational& beta, long r, const CNum& s,
                      ResolventNorm norm = ResolventNorm::kernel);

/// Hyperbolic form via cosh/sinh of acosh(s+1), principal branches. Requires Re s > 0.
CNum resolvent_hyperbolic(long m, const Rational& beta, long r, const CNum& s,
                          ResolventNorm norm = ResolventNorm::kernel);

struct RationalFn {
  Poly numerator;
  Poly denominator;

  Rational eval_exact(const Rational& s) const;
  CNum eval(const CNum& s) const;
  /// Taylor coefficients at s = 0.
  std::vector<Rational> taylor(std::size_t count) const;
};

/// F_{m,r}(s) = (U_{m-ell-1}(s+1) + U_{ell-1}(s+1))/(T_m(s+1) - 1) - 1/(ms) as an
/// exact rational function with the s = 0 singularity cancelled.
RationalFn resolvent_rational(long m, long r);

struct ResolventPole {
  Real value;
  std::vector<long> indices;  // the j with -2 sin^2(pi (j+beta)/m) = value
  bool coincident() const { return indices.size() > 1; }
};

/// Poles -2 sin^2(pi (j+beta)/m), ascending, coincidences collapsed exactly.
std::vector<ResolventPole> resolvent_poles(long m, const Rational& beta, Precision prec);

struct LaplaceResult {
  CNum value;
  Real quadrature_error;
  Real tail_bound;  // e^{-Re(s) T}/Re(s)
};

/// int_0^T e^{-st} K(x,y;t) dt with the spectral heat kernel, adaptive Gauss-Legendre.
LaplaceResult resolvent_from_laplace(long m, const Rational& beta, long x, long y, const CNum& s,
                                     const Real& horizon);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const GaussRule& gauss_legendre(int points, Precision prec);

}  // namespace cyclespec
