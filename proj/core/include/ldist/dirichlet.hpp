#pragma once

#include <cstdint>
#include <vector>

#include "ldist/characters.hpp"
#include "ldist/common.hpp"

namespace ldist {

/// Truncated Euler data: all prime powers p^n <= y with weights 1/(n p^{n s}).
struct EulerTruncation {
    double sigma = 0.0;
    double y = 0.0;
    std::uint32_t q = 0;
    struct Term {
        std::uint32_t p;
        std::uint32_t n;
        double weight;         // 1/(n p^{n sigma})
        std::uint32_t residue; // p^n mod q
    };
    std::vector<Term> terms;

    /// sum of weights = value at the principal character
    double weight_sum() const;
    /// sum of squared weights = E|R_y(sigma, X)|^2 for the random model
    double weight_sq_sum() const;
};

/// R_y values over the full character family.
struct LogLSamples {
    std::uint32_t q = 0;
    double sigma = 0.0;
    double y = 0.0;
    std::vector<complex> values; // indexed by character index j = 0..q-2

    /// values[q-1-j] == conj(values[j]) exactly, values[0] real
    bool conjugation_symmetric() const;
};

/// Build the truncation; requires 2 <= y < q.
EulerTruncation truncation(double sigma, double y, std::uint32_t q);

/// R_y(sigma, chi_j) for every j at once via binned weights + FFT.
LogLSamples r_y_all(const CharacterTable& t, const EulerTruncation& tr);

/// Default cutoff for empirical work: max((log q)^{6/(2 sigma - 1)}, 1e3),
/// capped at 1e7.
double default_y(std::uint32_t q, double sigma);

/// Direct evaluation of L(sigma, chi_j), non-principal only, q <= 1e5,
/// via residue-class blocks accelerated with Euler-Maclaurin (Hurwitz zeta;
/// digamma at sigma = 1). Absolute error well under 1e-8.
complex l_value_direct(const CharacterTable& t, std::uint32_t j, double sigma);

/// All non-principal L(sigma, chi_j) in one pass (index 0 holds 0).
std::vector<complex> l_values_all(const CharacterTable& t, double sigma);

/// Digamma for x > 0 (used by the sigma = 1 branch; exposed for tests).
double digamma(double x);

} // namespace ldist
