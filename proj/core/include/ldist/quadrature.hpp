#pragma once

#include <functional>

#include "ldist/common.hpp"

namespace ldist {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
};

/// Adaptive Gauss-Kronrod on a finite interval.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 15);

/// tanh-sinh (double-exponential) rule on a finite interval; handles
/// integrable endpoint singularities such as powers of log.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_level = 12);

/// Integral of f over [a, inf), mapped through u = a + (1-t)/t onto (0,1].
QuadResult integrate_gk_upper(const std::function<double(double)>& f, double a,
                              double abs_tol = 1e-12, double rel_tol = 1e-12);
QuadResult integrate_tanh_sinh_upper(const std::function<double(double)>& f, double a,
                                     double tol = 1e-12);

/// Mean of f over one period [0, 2pi): N-point rectangle rule, spectrally
/// accurate for smooth periodic integrands.
complex periodic_mean(const std::function<complex(double)>& f, int n);
double periodic_mean_real(const std::function<double(double)>& f, int n);

/// Composite 16-point Gauss-Legendre over [a, b] with fixed panel width;
/// panels chosen so oscillations up to max_freq cycles/unit are resolved.
double gl_panels(const std::function<double(double)>& f, double a, double b, double max_freq);

} // namespace ldist
