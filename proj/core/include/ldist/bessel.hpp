#pragma once

#include "ldist/common.hpp"

namespace ldist {

/// Modified Bessel function I0(u) for u >= 0. Overflows (+inf) past u ~ 709;
/// use log_i0_deriv(0, u) for the log form at large arguments.
double i0(double u);

/// Scaled forms e^-u I0(u), e^-u I1(u); stable for the whole range.
double i0e(double u);
double i1e(double u);

/// f(u) = log I0(u) and derivatives f^(m), m = 0..4.
/// m=0 is exact log-of-series / scaled-series; m>=1 come from I1/I0 ratios
/// with small-u Taylor branches for m=3,4.
double log_i0_deriv(int m, double u);

/// f'(u) - 1, computed without cancellation for large u.
double log_i0_d1_minus_one(double u);

} // namespace ldist
