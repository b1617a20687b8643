#pragma once

#include "cyclespec/characters.hpp"
#include "cyclespec/numeric.hpp"
#include "cyclespec/poly.hpp"

namespace cyclespec {

enum class LRoute {
  direct,
  gauss_recurrence,
  polynomial,
  derivative,         // L~: analytic beta-derivative of the generating function
  finite_difference,  // L~: five-point stencil in beta on the closed-form sums
  chebyshev,          // L^: Taylor coefficient of the Chebyshev rational function
};
const char* to_string(LRoute route);

/// Every route returns the unconjugated value.
struct LValue {
  long modulus = 0;
  long character = 0;
  long n = 1;
  CNum value;
  LRoute route = LRoute::direct;
  Real error_budget;
  /// The defining sum vanishes identically for this parity.
  bool vanishes = false;
};

/// sum_{j=1}^{m-1} chi(j) csc^{2n}(j pi/m). Odd chi gives exact 0 with vanishes set.
LValue l_direct(const DirichletCharacter& chi, long n, Precision prec);

/// (-1)^{n+1} 2^n (m / conj tau(chi)) sum_r conj chi(r) c_{m,r}(n-1). chi even primitive.
LValue l_via_gauss(const DirichletCharacter& chi, long n, Precision prec);

/// m c_{m,r}(n-1) as an exact polynomial in r (degree 2n), valid for 0 <= r < m.
Poly l_polynomial_in_r(long m, long n);

enum class PolyForm {
  automatic,  // displayed for n = 1, 2, symbolic otherwise
  displayed,  // the closed forms (2/conj tau) sum conj chi(r) (r-m) r and
              // -(2/(3 conj tau)) sum conj chi(r) (r-2m)(r-m) r (r+m); n = 1, 2 only
  symbolic,   // l_polynomial_in_r for every n
};

LValue l_polynomial(const DirichletCharacter& chi, long n, Precision prec,
                    PolyForm form = PolyForm::automatic);

/// sum_{j=1}^{m-1} chi(j) csc^{2n}(j pi/m) cot(j pi/m) for odd chi. Routes: direct,
/// derivative (requires chi primitive), finite_difference (requires chi primitive).
/// Even chi gives exact 0 with vanishes set.
LValue l_tilde(const DirichletCharacter& chi, long n, Precision prec,
               LRoute route = LRoute::derivative);

/// sum_{j=0}^{m-1} chi(j) sec^n(2 j pi/m), 4 not dividing m. Routes: direct, chebyshev
/// (requires chi primitive).
LValue l_hat(const DirichletCharacter& chi, long n, Precision prec,
             LRoute route = LRoute::chebyshev);

}  // namespace cyclespec
