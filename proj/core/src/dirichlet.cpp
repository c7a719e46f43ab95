#include "ldist/dirichlet.hpp"

#include "ldist/primes.hpp"
#include "ldist/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace ldist {

double EulerTruncation::weight_sum() const {
    std::vector<double> w(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) w[i] = terms[i].weight;
    return pairwise_sum(w);
}

double EulerTruncation::weight_sq_sum() const {
    std::vector<double> w(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) w[i] = terms[i].weight * terms[i].weight;
    return pairwise_sum(w);
}

bool LogLSamples::conjugation_symmetric() const {
    const std::size_t n = values.size();
    if (values.empty() || values[0].imag() != 0.0 || values[0].real() < 0.0) return false;
    for (std::size_t j = 1; j < n; ++j)
        if (values[n - j] != std::conj(values[j])) return false;
    return true;
}

EulerTruncation truncation(double sigma, double y, std::uint32_t q) {
    if (!(sigma > 0.5) || sigma > 1.0)
        throw validation_error("truncation: sigma must be in (1/2, 1]");
    if (!(y >= 2.0))
        throw validation_error("truncation: y must be >= 2");
    if (!(y < static_cast<double>(q)))
        throw validation_error("truncation: y >= q breaks the exact-moment regime");

    EulerTruncation tr;
    tr.sigma = sigma;
    tr.y = y;
    tr.q = q;
    auto pl = shared_primes(static_cast<std::uint64_t>(y) + 1);
    for (std::uint32_t p : pl->primes) {
        if (static_cast<double>(p) > y) break;
        double pn = 1.0;
        std::uint64_t residue = 1;
        for (std::uint32_t n = 1;; ++n) {
            pn *= p;
            if (pn > y) break;
            residue = residue * p % q;
            double w = 1.0 / (n * std::pow(pn, sigma));
            tr.terms.push_back({p, n, w, static_cast<std::uint32_t>(residue)});
        }
    }
    // group by prime power size: ascending p^n within each n is natural; keep
    // deterministic global order by (p, n) from construction
    return tr;
}

LogLSamples r_y_all(const CharacterTable& t, const EulerTruncation& tr) {
    if (tr.q != t.q) throw validation_error("r_y_all: modulus mismatch");
    const std::uint32_t m = t.q - 1;
    BinnedWeights w{t.q, std::vector<complex>(m, 0.0)};
    for (const auto& term : tr.terms)
        w.w[t.ind[term.residue - 1]] += term.weight;

    LogLSamples out;
    out.q = t.q;
    out.sigma = tr.sigma;
    out.y = tr.y;
    out.values = char_sums_all(t, w);
    // real weights: enforce the Hermitian symmetry exactly
    out.values[0] = complex(out.values[0].real(), 0.0);
    for (std::uint32_t j = 1; 2 * j <= m; ++j) {
        complex v = 0.5 * (out.values[j] + std::conj(out.values[m - j]));
        out.values[j] = v;
        out.values[m - j] = std::conj(v);
    }
    return out;
}

double default_y(std::uint32_t q, double sigma) {
    double lq = std::log(static_cast<double>(q));
    double y = std::pow(lq, 6.0 / (2.0 * sigma - 1.0));
    y = std::max(y, 1e3);
    return std::min(y, 1e7);
}

double digamma(double x) {
    if (!(x > 0.0)) throw validation_error("digamma: need x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series
    double inv = 1.0 / x, inv2 = inv * inv;
    double r = std::log(x) - 0.5 * inv;
    static const double c[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    double p = inv2;
    for (double ck : c) {
        r -= ck * p;
        p *= inv2;
    }
    return acc + r;
}

namespace {

// zeta(sigma, a/q) for all residues, or -psi(a/q)/q limiting values at sigma=1.
std::vector<double> residue_class_values(std::uint32_t q, double sigma) {
    std::vector<double> h(q); // index a = 1..q-1
    if (sigma == 1.0) {
        for (std::uint32_t a = 1; a < q; ++a)
            h[a] = -digamma(static_cast<double>(a) / q);
    } else {
        for (std::uint32_t a = 1; a < q; ++a)
            h[a] = hurwitz_zeta(sigma, static_cast<double>(a) / q);
    }
    return h;
}

} // namespace

complex l_value_direct(const CharacterTable& t, std::uint32_t j, double sigma) {
    if (j == 0) throw validation_error("l_value_direct: principal character rejected");
    if (j > t.q - 2) throw validation_error("l_value_direct: j out of range");
    if (!(sigma > 0.5) || sigma > 1.0)
        throw validation_error("l_value_direct: sigma must be in (1/2, 1]");
    if (t.q > 100000) throw validation_error("l_value_direct: q too large");

    auto h = residue_class_values(t.q, sigma);
    const double scale = (sigma == 1.0) ? 1.0 / t.q : std::pow(static_cast<double>(t.q), -sigma);
    complex s = 0.0;
    for (std::uint32_t a = 1; a < t.q; ++a)
        s += char_value(t, j, a) * h[a];
    return scale * s;
}

std::vector<complex> l_values_all(const CharacterTable& t, double sigma) {
    if (!(sigma > 0.5) || sigma > 1.0)
        throw validation_error("l_values_all: sigma must be in (1/2, 1]");
    if (t.q > 100000) throw validation_error("l_values_all: q too large");

    auto h = residue_class_values(t.q, sigma);
    const double scale = (sigma == 1.0) ? 1.0 / t.q : std::pow(static_cast<double>(t.q), -sigma);
    BinnedWeights w{t.q, std::vector<complex>(t.q - 1, 0.0)};
    for (std::uint32_t a = 1; a < t.q; ++a)
        w.w[t.ind[a - 1]] = scale * h[a];
    auto vals = char_sums_all(t, w);
    vals[0] = 0.0; // principal character: series diverges, exclude
    return vals;
}

} // namespace ldist
