#pragma once

#include <string>

#include "ldist/moments.hpp"

namespace ldist {

/// Saddle-point tail value. psi underflows double once the exponent passes
/// ~745, so log_psi is the primary quantity.
struct SaddleResult {
    double sigma = 0.0;
    double tau = 0.0;
    double kappa = 0.0;
    double psi = 0.0;      // exp(log_psi), 0.0 on underflow
    double log_psi = 0.0;
    double m0 = 0.0;       // M(kappa)
    double m2 = 0.0;       // M''(kappa)
    double exponent = 0.0; // tau*kappa - M(kappa) (+ gamma*kappa at sigma=1)
    std::string method;    // "saddle" or "expansion"
};

/// Solve M'(kappa) = tau (sigma < 1) or M'(kappa) = log tau + gamma
/// (sigma = 1); bracketing plus safeguarded Newton using M''. A positive
/// warm_start (e.g. from kappa_expansion) seeds the bracket doubling.
double solve_kappa(double sigma, double tau, double sieve_bound = 2e6, double warm_start = 0.0);

/// Saddle-point formula psi = exp(M - tau*kappa) / (kappa sqrt(2 pi M''));
/// at sigma = 1 the threshold is e^gamma * tau.
SaddleResult psi_saddle(double sigma, double tau, double sieve_bound = 2e6);

/// Two-term expansion of kappa(tau): g(sigma) (tau log tau)^{sigma/(1-sigma)}
/// (1 + f1(loglog tau)/log tau); tau >= 3.
double kappa_expansion(const ExpansionCoeffs& ec, double tau);

/// Closed-form leading tail: sigma < 1 uses fraka_0 + fraka_1/log tau in the
/// exponent; sigma = 1 uses exp(-e^{tau - A0 - 1}/tau). Returns log psi.
double log_psi_expansion(const ExpansionCoeffs& ec, double tau);

SaddleResult psi_expansion(const ExpansionCoeffs& ec, double tau);

} // namespace ldist
