#pragma once

#include "ldist/common.hpp"

namespace ldist {

/// Riemann zeta for real s > 1, Euler-Maclaurin, ~1e-14 relative.
double zeta_em(double s);

/// Hurwitz zeta(s, a) for s > 0 (s != 1), 0 < a <= 1. Euler-Maclaurin.
double hurwitz_zeta(double s, double a);

/// Prime zeta P(s) = sum_p p^-s for s > 1, via sum_k mu(k)/k log zeta(ks).
double prime_zeta(double s);

/// Tail sum_{p > bound} p^-s, exact up to zeta/prime-list precision:
/// prime_zeta(s) minus the finite head over sieved primes.
double prime_zeta_tail(double s, double bound);

} // namespace ldist
