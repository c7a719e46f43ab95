#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ldist/common.hpp"

namespace ldist {

/// Ascending list of all primes <= bound.
struct PrimeList {
    std::uint64_t bound = 0;
    std::vector<std::uint32_t> primes;

    std::size_t size() const { return primes.size(); }
    std::uint32_t operator[](std::size_t i) const { return primes[i]; }
    auto begin() const { return primes.begin(); }
    auto end() const { return primes.end(); }
};

/// Segmented sieve of Eratosthenes. 2 <= bound <= 2^31.
PrimeList sieve(std::uint64_t bound);

/// Shared process-wide prime cache; grows on demand and hands out immutable
/// snapshots so concurrent callers never copy the table.
std::shared_ptr<const PrimeList> shared_primes(std::uint64_t bound);

/// Deterministic Miller-Rabin, valid for all n < 3.2e9 (covers the 2^31 cap).
bool is_prime_u32(std::uint64_t n);

} // namespace ldist
