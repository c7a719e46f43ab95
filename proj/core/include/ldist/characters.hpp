#pragma once

#include <cstdint>
#include <vector>

#include "ldist/common.hpp"

namespace ldist {

/// The character group mod a prime q, realized through a dense discrete-log
/// table for the smallest primitive root g: chi_j(n) = e(j*ind(n)/(q-1)).
/// Immutable after construction; safe to share across threads.
struct CharacterTable {
    std::uint32_t q = 0;        // prime modulus
    std::uint32_t g = 0;        // smallest primitive root of q
    std::vector<std::uint32_t> ind; // ind[n-1] = discrete log of n, n in [1, q-1]

    std::uint32_t order() const { return q - 1; }
    std::uint32_t index_of(std::uint64_t n) const; // n coprime to q, any representative
};

/// Build the table for a prime q >= 3. Throws not_prime_error otherwise.
CharacterTable build_table(std::uint32_t q);

/// chi_j(n) = e(j * ind(n) / (q-1)); requires 0 <= j <= q-2 and q not | n.
complex char_value(const CharacterTable& t, std::uint32_t j, std::uint64_t n);

/// Weights on residue indices a in [0, q-2]; length must be exactly q-1.
struct BinnedWeights {
    std::uint32_t q = 0;
    std::vector<complex> w;
};

/// S(j) = sum_a w(a) e(j*a/(q-1)) for all j at once, via an FFT of (arbitrary)
/// length q-1. Deterministic; entrywise within 1e-10 of naive summation.
std::vector<complex> char_sums_all(const CharacterTable& t, const BinnedWeights& w);

} // namespace ldist
