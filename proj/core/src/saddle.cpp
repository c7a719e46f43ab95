#include "ldist/saddle.hpp"

#include <cmath>

namespace ldist {

double solve_kappa(double sigma, double tau, double sieve_bound, double warm_start) {
    const bool line1 = (sigma == 1.0);
    if (line1 && !(tau >= 1.0)) throw validation_error("solve_kappa: tau >= 1 at sigma = 1");
    if (!line1 && !(tau >= 0.0)) throw validation_error("solve_kappa: tau >= 0");
    const double target = line1 ? std::log(tau) + euler_gamma : tau;
    if (target == 0.0) return 0.0;
    if (target < 0.0) throw validation_error("solve_kappa: target below M'(0) = 0");

    auto m1 = [&](double k) { return m_global(sigma, k, 1, sieve_bound).value; };
    auto m2 = [&](double k) { return m_global(sigma, k, 2, sieve_bound).value; };

    // bracket: double kappa_hi until M' exceeds the target
    double lo = 0.0, hi = warm_start > 0.0 ? 0.5 * warm_start : 1.0;
    double f_hi = m1(hi) - target;
    int guard = 0;
    while (f_hi < 0.0) {
        lo = hi;
        hi *= 2.0;
        f_hi = m1(hi) - target;
        if (++guard > 60) throw convergence_error("solve_kappa: failed to bracket the saddle");
    }

    // safeguarded Newton (M' is increasing since M'' > 0)
    double k = 0.5 * (lo + hi);
    const double tol = 1e-10 * std::max(1.0, target);
    for (int it = 0; it < 200; ++it) {
        double g = m1(k) - target;
        if (std::abs(g) <= tol) return k;
        if (g > 0.0) hi = k;
        else lo = k;
        double step = g / std::max(1e-300, m2(k));
        double next = k - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        k = next;
    }
    double g = m1(k) - target;
    if (std::abs(g) <= 1e3 * tol) return k;
    throw convergence_error("solve_kappa: no convergence after 200 iterations, bracket [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

SaddleResult psi_saddle(double sigma, double tau, double sieve_bound) {
    if (!(tau >= 1.0)) throw validation_error("psi_saddle: tau >= 1 required");
    const bool line1 = (sigma == 1.0);
    const double thr = line1 ? std::log(tau) + euler_gamma : tau;

    SaddleResult r;
    r.sigma = sigma;
    r.tau = tau;
    r.method = "saddle";
    r.kappa = solve_kappa(sigma, tau, sieve_bound);
    r.m0 = m_global(sigma, r.kappa, 0, sieve_bound).value;
    r.m2 = m_global(sigma, r.kappa, 2, sieve_bound).value;
    r.exponent = thr * r.kappa - r.m0;
    r.log_psi = -r.exponent - std::log(r.kappa * std::sqrt(two_pi * r.m2));
    r.psi = std::exp(r.log_psi);
    return r;
}

double kappa_expansion(const ExpansionCoeffs& ec, double tau) {
    if (!(tau >= 3.0)) throw validation_error("kappa_expansion: tau >= 3");
    if (!(ec.sigma < 1.0)) throw validation_error("kappa_expansion: sigma < 1 only");
    const double s = ec.sigma;
    const double lt = std::log(tau), llt = std::log(lt);
    const double a01 = ec.a[0][1], a11 = ec.a[1][1];
    double f1 = s / (1.0 - s) * llt + std::log(ec.gsigma) - a11 / a01;
    return ec.gsigma * std::pow(tau * lt, s / (1.0 - s)) * (1.0 + f1 / lt);
}

double log_psi_expansion(const ExpansionCoeffs& ec, double tau) {
    if (!(tau >= 3.0)) throw validation_error("psi_expansion: tau >= 3");
    if (ec.sigma == 1.0) return -std::exp(tau - ec.A0 - 1.0) / tau;
    const double s = ec.sigma;
    const double lt = std::log(tau), llt = std::log(lt);
    double frak_a1 = ec.frak_a1_slope * llt + ec.frak_a1_const;
    double scale = std::pow(tau * std::pow(lt, s), 1.0 / (1.0 - s));
    return -scale * (ec.frak_a0 + frak_a1 / lt);
}

SaddleResult psi_expansion(const ExpansionCoeffs& ec, double tau) {
    SaddleResult r;
    r.sigma = ec.sigma;
    r.tau = tau;
    r.method = "expansion";
    r.log_psi = log_psi_expansion(ec, tau);
    r.psi = std::exp(r.log_psi);
    r.exponent = -r.log_psi;
    if (ec.sigma < 1.0) r.kappa = kappa_expansion(ec, tau);
    return r;
}

} // namespace ldist
