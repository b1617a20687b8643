#pragma once

#include <map>
#include <vector>

#include "cyclespec/bessel.hpp"
#include "cyclespec/numeric.hpp"

namespace cyclespec {

struct CycleParams {
  long m = 2;
  Rational beta;
  Precision precision = kDefaultPrecision;
};

enum class HeatMethod { image, spectral };

const char* to_string(HeatMethod method);

struct HeatValue {
  CycleParams params;
  long x = 0;
  long y = 0;
  Real t;
  CNum value;
  HeatMethod method = HeatMethod::spectral;
  Real tail_bound;
};

/// e^{-t} I_{x-y}(t), the heat kernel on Z.
CNum heat_kernel_line(long x, long y, const Real& t, Precision prec);

/// Twisted heat kernel on the m-cycle.
HeatValue heat_kernel_cycle(const CycleParams& params, long x, long y, const Real& t,
                            HeatMethod method);

/// Heat kernel evaluator at a fixed (params, t). Values are memoized per x - y; not
/// safe for concurrent use.
class HeatEvaluator {
 public:
  HeatEvaluator(CycleParams params, const Real& t);

  HeatValue image(long x, long y);
  HeatValue spectral(long x, long y) const;
  /// d/dt of the spectral form.
  CNum spectral_dt(long x, long y) const;

 private:
  const BesselEval& bessel(long order);

  CycleParams params_;
  Real t_;
  Real tail_eps_;
  Real exp_minus_t_;
  std::vector<Real> decay_;   // e^{-lambda_j t}
  std::vector<Real> lambda_;  // lambda_j
  std::map<long, BesselEval> bessel_;
  std::map<long, HeatValue> image_memo_;
  mutable std::map<long, HeatValue> spectral_memo_;
};

/// Eigenvalues 2 sin^2(pi (j + beta)/m), j = 0..m-1.
std::vector<Real> cycle_eigenvalues(long m, const Rational& beta, Precision prec);
/// psi_j(x) = e^{2 pi i (j + beta) x / m}, x = 0..m-1.
std::vector<CNum> cycle_eigenfunction(long m, const Rational& beta, long j, Precision prec);

/// (Delta f)(x) = f(x) - (f~(x+1) + f~(x-1))/2 with f~(x + km) = e^{2 pi i beta k} f(x).
std::vector<CNum> twisted_laplacian_apply(const CycleParams& params, const std::vector<CNum>& f);

/// |central difference d/dt K + Delta K| at (x, y, t), spectral kernel.
Real heat_residual(const CycleParams& params, long x, long y, const Real& t, const Real& h);
/// Same with the exact time derivative of the spectral sum.
Real heat_residual_analytic(const CycleParams& params, long x, long y, const Real& t);

}  // namespace cyclespec
