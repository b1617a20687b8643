#pragma once

#include "cyclespec/numeric.hpp"

namespace cyclespec {

struct BesselEval {
  long order;
  Real argument;
  Real value;
  /// |I_order(argument) - value| <= tail_bound.
  Real tail_bound;
};

/// Modified Bessel function I_nu(t), integer order, t >= 0, by the ascending series.
BesselEval bessel_i(long nu, const Real& t, Precision prec);

/// Upper bound for sum_{|k|>K} e^{-t} I_{|ell+km|}(t), from I_nu(t) <= (t/2)^nu e^t / nu!.
Real bessel_image_tail(long m, long ell, const Real& t, long K);

/// Smallest K >= 0 with bessel_image_tail(m, ell, t, K) < eps.
long bessel_tail_index(long m, long ell, const Real& t, const Real& eps);

}  // namespace cyclespec
