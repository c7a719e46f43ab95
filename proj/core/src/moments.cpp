#include "ldist/moments.hpp"

#include "ldist/bessel.hpp"
#include "ldist/parallel.hpp"
#include "ldist/primes.hpp"
#include "ldist/quadrature.hpp"
#include "ldist/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace ldist {

namespace {

// log 2F1(k/2, k/2; 1; x) = sum_j d_j(kappa) x^j; coefficients of kappa^t,
// ascending t. Exact values of the rational coefficients.
const std::vector<std::vector<double>> d_poly = {
    {0, 0, 0.25},
    {0, 0, 0.0625, 0.0625, -0.015625},
    {0, 0, 0.027777777777777778, 0.041666666666666667, 0.0069444444444444444,
     -0.010416666666666667, 0.0017361111111111111},
    {0, 0, 0.015625, 0.028645833333333333, 0.012044270833333333,
     -0.0065104166666666667, -0.0030924479166666667, 0.0017903645833333333,
     -0.00022379557291666667},
    {0, 0, 0.01, 0.020833333333333333, 0.0125, -0.0028645833333333333,
     -0.0045052083333333333, 0.00065104166666666667, 0.00084635416666666667,
     -0.00030924479166666667, 3.0924479166666667e-05},
    {0, 0, 0.0069444444444444444, 0.015856481481481481, 0.011699459876543210,
     -0.00047019675925925926, -0.0044096016589506173, -0.00058051215277777778,
     0.0011334454571759259, 3.8429542824074074e-05, -0.00019987129870756173,
     5.3462275752314815e-05, -4.4551896460262346e-06},
    {0, 0, 0.0051020408163265306, 0.0125, 0.010615079365079365,
     0.0010127314814814815, -0.0038235780423280423, -0.0014049065806878307,
     0.00094604030848450491, 0.00042046440972222222, -0.00022960844494047619,
     -4.4985170717592593e-05, 4.3806449446097884e-05, -9.2440812045304233e-06,
     6.6029151460931595e-07},
};

// m-th derivative of d_j at kappa (polynomial differentiation)
double d_poly_deriv(int j, int m, double kappa) {
    const auto& c = d_poly[j];
    double s = 0.0;
    for (int t = (int)c.size() - 1; t >= m; --t) {
        double f = 1.0;
        for (int i = 0; i < m; ++i) f *= (t - i);
        s = s * kappa + c[t] * f;
    }
    return s;
}

// ---- per-prime evaluation ----------------------------------------------

// series route: E^(m) = sum_k t_k * poly_m(sig1, sig2, sig3), with
// t_k = [(s/2)_k / k!]^2 c^{2k}, sig_r(k) = sum_{j<k} (s/2+j)^-r.
template <typename T>
struct SeriesMoments {
    T e0, e1, e2, e3; // E, E', E'', E'''
};

template <typename T>
SeriesMoments<T> local_series(T s, double c2, int max_m) {
    T t = 1.0;
    T sig1 = 0.0, sig2 = 0.0, sig3 = 0.0;
    T S0 = 1.0, S1 = 0.0, S2 = 0.0, S3 = 0.0;
    for (int k = 0; k < 20000; ++k) {
        T base = 0.5 * s + static_cast<double>(k);
        T ratio = c2 * base * base / ((k + 1.0) * (k + 1.0));
        T inv = 1.0 / base;
        sig1 += inv;
        sig2 += inv * inv;
        sig3 += inv * inv * inv;
        t *= ratio;
        S0 += t;
        if (max_m >= 1) S1 += t * sig1;
        if (max_m >= 2) S2 += t * (sig1 * sig1 - 0.5 * sig2);
        if (max_m >= 3) S3 += t * (sig1 * sig1 * sig1 - 1.5 * sig1 * sig2 + 0.5 * sig3);
        if (std::abs(t) < 1e-18 * std::abs(S0) && k > std::abs(s) * std::sqrt(c2) / 2) break;
    }
    return {S0, S1, S2, S3};
}

// quadrature route for peaked integrands: E^(m) = e^{kappa L} *
// (1/pi) int_0^pi e^{s h(th)} (L + h(th))^m dth, h <= 0, h(0) = 0.
struct QuadMoments {
    double e0, e1, e2, e3; // scaled moments (the e^{kappa L} factor removed)
};

QuadMoments local_quad(double s, double c, double L, int max_m) {
    auto h = [&](double th) {
        double one_m_cos = 2.0 * std::pow(std::sin(0.5 * th), 2);
        return -0.5 * std::log1p(2.0 * c * one_m_cos / ((1.0 - c) * (1.0 - c)));
    };
    QuadMoments out{0, 0, 0, 0};
    for (int m = 0; m <= max_m; ++m) {
        auto f = [&](double th) {
            double hv = h(th);
            return std::exp(s * hv) * std::pow(L + hv, m) / pi;
        };
        double v = integrate_gk(f, 0.0, pi, 1e-15, 1e-13).value;
        if (m == 0) out.e0 = v;
        if (m == 1) out.e1 = v;
        if (m == 2) out.e2 = v;
        if (m == 3) out.e3 = v;
    }
    return out;
}

struct LocalDerivs {
    double m0, m1, m2, m3;
};

LocalDerivs cumulants_from_moments(double e0, double e1, double e2, double e3, double log_e0) {
    double r1 = e1 / e0, r2 = e2 / e0, r3 = e3 / e0;
    return {log_e0, r1, r2 - r1 * r1, r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1};
}

// deep-tilt regime kappa*c >> 1: the local factor concentrates at theta = 0,
// E ~ sinh(a/2) e^{kappa L} / sqrt(2 pi kappa), a = sigma log p
LocalDerivs mp_asymptotic(double c, double L, double kappa) {
    double sinh_half = 0.5 * (1.0 / std::sqrt(c) - std::sqrt(c));
    return {kappa * L + std::log(sinh_half) - 0.5 * std::log(two_pi * kappa),
            L - 0.5 / kappa,
            0.5 / (kappa * kappa),
            -1.0 / (kappa * kappa * kappa)};
}

constexpr double deep_tilt = 3e3; // kappa*c above this: closed asymptotics

LocalDerivs mp_all(double sigma, double p, double kappa, int max_m) {
    const double c = std::pow(p, -sigma);
    const double c2 = c * c;
    const double L = -std::log1p(-c);
    if (kappa * L <= 500.0) {
        auto s = local_series<double>(kappa, c2, max_m);
        // log E via log1p of the k>=1 part for tiny local factors
        double log_e0 = (s.e0 - 1.0 < 0.5) ? std::log1p(s.e0 - 1.0) : std::log(s.e0);
        return cumulants_from_moments(s.e0, s.e1, s.e2, s.e3, log_e0);
    }
    if (kappa * c > deep_tilt) return mp_asymptotic(c, L, kappa);
    auto q = local_quad(kappa, c, L, max_m);
    auto cu = cumulants_from_moments(q.e0, q.e1, q.e2, q.e3, std::log(q.e0));
    cu.m0 += kappa * L;
    return cu;
}

} // namespace

double mp_deriv(double sigma, std::uint32_t p, double exponent, int m) {
    if (m < 0 || m > 3) throw validation_error("mp_deriv: order m must be 0..3");
    if (!(sigma > 0.5) || sigma > 1.0) throw validation_error("mp_deriv: sigma in (1/2,1]");
    if (!(exponent >= 0.0)) throw validation_error("mp_deriv: exponent must be >= 0");
    auto d = mp_all(sigma, p, exponent, m);
    switch (m) {
    case 0: return d.m0;
    case 1: return d.m1;
    case 2: return d.m2;
    default: return d.m3;
    }
}

complex mp_deriv_complex(double sigma, std::uint32_t p, complex s, int m) {
    if (m != 0) throw validation_error("mp_deriv_complex: only m = 0 supported");
    if (!(s.real() >= 0.0)) throw validation_error("mp_deriv_complex: Re exponent >= 0");
    const double c = std::pow(static_cast<double>(p), -sigma);
    const double c2 = c * c;
    const double L = -std::log1p(-c);
    if (s.real() * L <= 400.0 && std::abs(s) * L <= 500.0) {
        auto sm = local_series<complex>(s, c2, 0);
        return std::log(sm.e0);
    }
    auto h = [&](double th) {
        double one_m_cos = 2.0 * std::pow(std::sin(0.5 * th), 2);
        return -0.5 * std::log1p(2.0 * c * one_m_cos / ((1.0 - c) * (1.0 - c)));
    };
    auto fre = [&](double th) { double hv = h(th); return std::exp(s.real() * hv) * std::cos(s.imag() * hv) / pi; };
    auto fim = [&](double th) { double hv = h(th); return std::exp(s.real() * hv) * std::sin(s.imag() * hv) / pi; };
    double re = integrate_gk(fre, 0.0, pi, 1e-15, 1e-13).value;
    double im = integrate_gk(fim, 0.0, pi, 1e-15, 1e-13).value;
    return s * L + std::log(complex(re, im));
}

double mp_bessel_surrogate(double sigma, double p, double kappa, int m) {
    double c = std::pow(p, -sigma);
    return std::pow(p, -m * sigma) * log_i0_deriv(m, kappa * c);
}

namespace {

// cached p^{-2 sigma} arrays per (sigma, sieve bound)
struct CsqCache {
    std::mutex mu;
    std::map<std::pair<double, double>, std::shared_ptr<const std::vector<double>>> map;
};
CsqCache g_csq;

std::shared_ptr<const std::vector<double>> csq_for(double sigma, double bound) {
    std::lock_guard<std::mutex> lock(g_csq.mu);
    auto key = std::make_pair(sigma, bound);
    auto it = g_csq.map.find(key);
    if (it != g_csq.map.end()) return it->second;
    auto pl = shared_primes(static_cast<std::uint64_t>(bound));
    auto vec = std::make_shared<std::vector<double>>();
    vec->reserve(pl->size());
    for (std::uint32_t p : pl->primes) {
        if (p > bound) break;
        vec->push_back(std::pow(static_cast<double>(p), -2.0 * sigma));
    }
    if (g_csq.map.size() > 32) g_csq.map.clear();
    g_csq.map.emplace(key, vec);
    return vec;
}

// prime-zeta tails for the d_j expansion, cached per (sigma, bound)
std::shared_ptr<const std::array<double, 8>> pzt_for(double sigma, double bound) {
    static std::mutex mu;
    static std::map<std::pair<double, double>, std::shared_ptr<const std::array<double, 8>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(sigma, bound);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto arr = std::make_shared<std::array<double, 8>>();
    for (int j = 1; j <= 7; ++j) (*arr)[j] = prime_zeta_tail(2.0 * j * sigma, bound);
    if (cache.size() > 32) cache.clear();
    cache.emplace(key, arr);
    return arr;
}

} // namespace

MValue m_global(double sigma, double kappa, int m, double sieve_bound) {
    if (m < 0 || m > 3) throw validation_error("m_global: order m must be 0..3");
    if (!(sigma > 0.5) || sigma > 1.0) throw validation_error("m_global: sigma in (1/2,1]");
    if (!(kappa >= 0.0) || kappa > 2e9) throw validation_error("m_global: kappa out of range");
    if (kappa == 0.0 && m == 0) return {0.0, 0.0};

    auto pl = shared_primes(static_cast<std::uint64_t>(sieve_bound));
    auto c2s = csq_for(sigma, sieve_bound);
    const std::size_t n = c2s->size();

    // per-chunk partial sums, combined in fixed chunk order
    const std::size_t grain = 4096;
    std::vector<double> partial(chunk_count(n, grain), 0.0);
    parallel_chunks(n, grain, [&](std::size_t ci, std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            double p = pl->primes[i];
            double c2 = (*c2s)[i];
            double L = -std::log1p(-std::sqrt(c2));
            if (kappa * L <= 500.0) {
                auto s = local_series<double>(kappa, c2, m);
                switch (m) {
                case 0: acc += (s.e0 - 1.0 < 0.5) ? std::log1p(s.e0 - 1.0) : std::log(s.e0); break;
                case 1: acc += s.e1 / s.e0; break;
                case 2: { double r1 = s.e1 / s.e0; acc += s.e2 / s.e0 - r1 * r1; break; }
                default: {
                    double r1 = s.e1 / s.e0, r2 = s.e2 / s.e0, r3 = s.e3 / s.e0;
                    acc += r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1;
                }
                }
            } else {
                auto d = mp_all(sigma, p, kappa, m);
                switch (m) {
                case 0: acc += d.m0; break;
                case 1: acc += d.m1; break;
                case 2: acc += d.m2; break;
                default: acc += d.m3; break;
                }
            }
        }
        partial[ci] = acc;
    });
    double head = pairwise_sum(partial);
    double err = 1e-14 * std::abs(head) * std::sqrt(static_cast<double>(n));

    // tail over p > sieve_bound
    double tail = 0.0;
    const double edge = kappa * std::pow(sieve_bound, -sigma);
    if (edge <= 0.5) {
        auto pzt = pzt_for(sigma, sieve_bound);
        double last = 0.0;
        for (int j = 1; j <= 7; ++j) {
            last = d_poly_deriv(j - 1, m, kappa) * (*pzt)[j];
            tail += last;
        }
        err += std::abs(last); // truncation of the d_j series
    } else if (kappa > 0.0) {
        // very large kappa: prime-density integral of the Bessel surrogate
        auto f = [&](double t) {
            return mp_bessel_surrogate(sigma, t, kappa, m) / std::log(t);
        };
        auto q = integrate_gk_upper(f, sieve_bound, 0.0, 1e-10);
        tail = q.value;
        // PNT density error (~|pi - li|/li at the sieve edge) plus the
        // f-surrogate defect ~ kappa t^{-2 sigma}/2 per prime for m = 0
        double pnt_rel = 2e-4;
        double defect = 0.0;
        if (m == 0) {
            auto fd = [&](double t) { return 0.5 * kappa * std::pow(t, -2.0 * sigma) / std::log(t); };
            defect = integrate_gk_upper(fd, sieve_bound, 0.0, 1e-6).value;
        }
        err += pnt_rel * std::abs(tail) + defect + q.error;
    }
    return {head + tail, err};
}

complex m_global_complex(double sigma, complex s, double sieve_bound) {
    if (!(s.real() >= 0.0) || s.real() > 1e8)
        throw validation_error("m_global_complex: Re exponent out of range");
    auto pl = shared_primes(static_cast<std::uint64_t>(sieve_bound));
    auto c2s = csq_for(sigma, sieve_bound);
    const std::size_t n = c2s->size();
    const std::size_t grain = 4096;
    std::vector<complex> partial(chunk_count(n, grain), 0.0);
    parallel_chunks(n, grain, [&](std::size_t ci, std::size_t lo, std::size_t hi) {
        complex acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            acc += mp_deriv_complex(sigma, pl->primes[i], s, 0);
        partial[ci] = acc;
    });
    complex head = 0.0;
    for (auto v : partial) head += v;

    complex tail = 0.0;
    const double edge = std::abs(s) * std::pow(sieve_bound, -sigma);
    if (edge <= 0.5) {
        auto pzt = pzt_for(sigma, sieve_bound);
        for (int j = 1; j <= 7; ++j) {
            // complex polynomial evaluation of d_j
            const auto& c = d_poly[j - 1];
            complex dj = 0.0;
            for (int t = (int)c.size() - 1; t >= 0; --t) dj = dj * s + c[t];
            tail += dj * (*pzt)[j];
        }
    } else {
        // integrand of the density tail via the quadratic cumulant
        auto fre = [&](double t) { return ((s * s) * 0.25 * std::pow(t, -2.0 * sigma)).real() / std::log(t); };
        auto fim = [&](double t) { return ((s * s) * 0.25 * std::pow(t, -2.0 * sigma)).imag() / std::log(t); };
        tail = complex(integrate_gk_upper(fre, sieve_bound, 0.0, 1e-8).value,
                       integrate_gk_upper(fim, sieve_bound, 0.0, 1e-8).value);
    }
    return head + tail;
}

MomentProfile moment_profile(double sigma, double kappa, double sieve_bound) {
    MomentProfile mp;
    mp.sigma = sigma;
    mp.exponent = kappa;
    auto v0 = m_global(sigma, kappa, 0, sieve_bound);
    auto v1 = m_global(sigma, kappa, 1, sieve_bound);
    auto v2 = m_global(sigma, kappa, 2, sieve_bound);
    auto v3 = m_global(sigma, kappa, 3, sieve_bound);
    mp.m0 = v0.value;
    mp.m1 = v1.value;
    mp.m2 = v2.value;
    mp.m3 = v3.value;
    mp.err = {v0.err, v1.err, v2.err, v3.err};
    return mp;
}

// ---- coefficient integrals ----------------------------------------------

namespace {

QuadResult run_scheme(const std::function<double(double)>& f, double a, double b,
                      QuadScheme scheme, double tol) {
    if (scheme == QuadScheme::tanh_sinh) return integrate_tanh_sinh(f, a, b, tol);
    return integrate_gk(f, a, b, tol * 1e-2, tol);
}

} // namespace

double coeff_a(double sigma, int n, int m, QuadScheme scheme) {
    if (!(sigma > 0.5) || !(sigma < 1.0))
        throw validation_error("coeff_a: sigma must be in (1/2, 1)");
    if (n < 0 || n > 4 || m < 0 || m > 2) throw validation_error("coeff_a: n <= 4, m <= 2");
    const double inv = 1.0 / sigma;
    auto logn = [n](double u) {
        double l = std::log(u), r = 1.0;
        for (int i = 0; i < n; ++i) r *= l;
        return r;
    };
    // (0, 1]
    auto f_lo = [&](double u) {
        if (u <= 0.0) return 0.0;
        return log_i0_deriv(m, u) * logn(u) * std::pow(u, m - inv - 1.0);
    };
    // [1, inf) mapped through u -> 1/t
    auto f_hi = [&](double t) {
        if (t <= 0.0) return 0.0;
        double u = 1.0 / t;
        return log_i0_deriv(m, u) * logn(u) * std::pow(u, m - inv - 1.0) * (u * u);
    };
    auto lo = run_scheme(f_lo, 0.0, 1.0, scheme, 1e-11);
    auto hi = run_scheme(f_hi, 0.0, 1.0, scheme, 1e-11);
    return lo.value + hi.value;
}

double coeff_A(int n, int m, QuadScheme scheme) {
    if (n < 0 || n > 4 || m < 0 || m > 2) throw validation_error("coeff_A: n <= 4, m <= 2");
    auto logn = [n](double u) {
        double l = std::log(u), r = 1.0;
        for (int i = 0; i < n; ++i) r *= l;
        return r;
    };
    std::function<double(double)> f_lo, f_hi; // f_hi on t in (0,1], u = 1/t
    switch (m) {
    case 0:
        f_lo = [&](double t) {
            if (t <= 0.0) return 0.0;
            return logn(t) * log_i0_deriv(0, t) / (t * t);
        };
        f_hi = [&](double t) {
            if (t <= 0.0) return 0.0;
            double u = 1.0 / t;
            return logn(u) * std::log(i0e(u)); // (f(u) - u)/u^2 * u^2
        };
        break;
    case 1:
        f_lo = [&](double t) {
            if (t <= 0.0) return 0.0;
            return logn(t) * log_i0_deriv(1, t) / t;
        };
        f_hi = [&](double t) {
            if (t <= 0.0) return 0.0;
            double u = 1.0 / t;
            return logn(u) * log_i0_d1_minus_one(u) / t; // (f'-1)/u * u^2/u = .../t
        };
        break;
    default:
        f_lo = [&](double t) {
            if (t <= 0.0) return 0.0;
            return logn(t) * log_i0_deriv(2, t);
        };
        f_hi = [&](double t) {
            if (t <= 0.0) return 0.0;
            double u = 1.0 / t;
            return logn(u) * log_i0_deriv(2, u) * u * u;
        };
        break;
    }
    auto lo = run_scheme(f_lo, 0.0, 1.0, scheme, 1e-11);
    auto hi = run_scheme(f_hi, 0.0, 1.0, scheme, 1e-11);
    return lo.value + hi.value;
}

ExpansionCoeffs compute_expansion_coeffs(double sigma) {
    if (!(sigma > 0.5) || sigma > 1.0)
        throw validation_error("compute_expansion_coeffs: sigma in (1/2, 1]");
    ExpansionCoeffs ec;
    ec.sigma = sigma;
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) ec.A[n][m] = coeff_A(n, m);
    ec.A0 = ec.A[0][0];
    if (sigma < 1.0) {
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m) ec.a[n][m] = coeff_a(sigma, n, m);
        const double a00 = ec.a[0][0], a01 = ec.a[0][1], a10 = ec.a[1][0];
        if (!(a00 > 0.0) || !(a01 > 0.0) || std::abs(sigma * a01 - a00) > 1e-6)
            throw convergence_error("expansion coefficients failed the sigma*a01 = a00 identity");
        ec.gsigma = std::pow(sigma / ((1.0 - sigma) * a01), sigma / (1.0 - sigma));
        ec.frak_a0 = ec.gsigma * (1.0 - a00 / a01);
        ec.frak_a1_slope = ec.gsigma * sigma;
        ec.frak_a1_const = ec.gsigma * (1.0 - sigma) * (std::log(ec.gsigma) - a10 / a00);
    }
    return ec;
}

} // namespace ldist
