#pragma once

#include <cstdint>

#include "ldist/common.hpp"

namespace ldist {

/// Stateless counter-based generator: every output is a pure hash of
/// (seed, counter, stream), so sample k is reproducible no matter how work
/// is scheduled across threads.
namespace crng {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t hash3(std::uint64_t seed, std::uint64_t counter, std::uint64_t stream) {
    std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ull);
    h = mix64(h ^ counter);
    h = mix64(h ^ (stream + 0x3c6ef372fe94f82bull));
    return h;
}

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter, std::uint64_t stream) {
    return static_cast<double>(hash3(seed, counter, stream) >> 11) * 0x1.0p-53;
}

/// Uniform angle in [0, 2*pi): 2*pi times a 53-bit uniform.
inline double uniform_angle(std::uint64_t seed, std::uint64_t counter, std::uint64_t stream) {
    return two_pi * uniform01(seed, counter, stream);
}

} // namespace crng
} // namespace ldist
