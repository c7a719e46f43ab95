#pragma once

#include <array>
#include <cstdint>

#include "ldist/common.hpp"

namespace ldist {

/// Quadrature scheme selector for the coefficient integrals (two independent
/// routes; agreement between them is part of the test surface).
enum class QuadScheme { gauss_kronrod, tanh_sinh };

/// M(kappa) = log E(|L(sigma,X)|^kappa) and derivatives at one exponent.
struct MomentProfile {
    double sigma = 0.0;
    complex exponent = 0.0;
    double m0 = 0, m1 = 0, m2 = 0, m3 = 0;
    std::array<double, 4> err{}; // absolute error estimates
};

struct MValue {
    double value = 0.0;
    double err = 0.0;
};

/// Per-prime local factor M_p^(m)(exponent), m = 0..3.
/// Series route for moderate exponents, peak-shifted quadrature when
/// kappa * |log(1-p^-sigma)| is large; absolute error ~1e-12 relative.
double mp_deriv(double sigma, std::uint32_t p, double exponent, int m);
complex mp_deriv_complex(double sigma, std::uint32_t p, complex exponent, int m);

/// Bessel surrogate p^{-m sigma} f^(m)(kappa p^-sigma) (cross-validation and
/// the integrand of the large-kappa prime-density tail).
double mp_bessel_surrogate(double sigma, double p, double kappa, int m);

/// Global assembly: sum over sieved primes plus an exact prime-zeta tail
/// (a density-integral tail in the very-large-kappa regime).
MValue m_global(double sigma, double kappa, int m, double sieve_bound = 2e6);
complex m_global_complex(double sigma, complex s, double sieve_bound = 2e6);

MomentProfile moment_profile(double sigma, double kappa, double sieve_bound = 2e6);

/// a_n^(m) = integral of f^(m)(u) (log u)^n u^{m - 1/sigma - 1} du over (0,inf),
/// for 1/2 < sigma < 1, n <= 4, m <= 2.
double coeff_a(double sigma, int n, int m, QuadScheme scheme = QuadScheme::gauss_kronrod);

/// A_n^(m): the sigma = 1 analogues with the regularized large-u integrand.
double coeff_A(int n, int m, QuadScheme scheme = QuadScheme::gauss_kronrod);

/// Expansion coefficients consumed by the saddle module.
struct ExpansionCoeffs {
    double sigma = 0.0;
    double a[3][3] = {};      // a[n][m], n = 0..2, m = 0..2   (sigma < 1)
    double A[3][3] = {};      // A[n][m] at sigma = 1 (sigma-independent)
    double gsigma = 0.0;      // (sigma/((1-sigma) a01))^{sigma/(1-sigma)}
    double frak_a0 = 0.0;     // g(sigma) (1 - a00/a01)
    double frak_a1_slope = 0.0;  // coefficient of loglog tau in fraka_1
    double frak_a1_const = 0.0;
    double A0 = 0.0;          // A_0^(0)
    double gamma_euler = ldist::euler_gamma;
};

/// Computes the full table; checks sigma*a01 == a00 to 1e-6 internally.
ExpansionCoeffs compute_expansion_coeffs(double sigma);

} // namespace ldist
