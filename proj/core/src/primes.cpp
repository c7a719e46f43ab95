#include "ldist/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace ldist {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // bases {2,3,5,7} are a deterministic MR witness set below 3,215,031,751
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeList sieve(std::uint64_t bound) {
    if (bound < 2 || bound > (1ull << 31))
        throw validation_error("sieve: bound must be in [2, 2^31]");

    PrimeList out;
    out.bound = bound;
    // pi(x) upper estimate to reserve
    double x = static_cast<double>(bound);
    out.primes.reserve(bound < 17 ? 8 : static_cast<std::size_t>(1.26 * x / std::log(x)));

    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound)));
    std::vector<char> small(root + 2, 1);
    for (std::uint64_t i = 2; i * i <= root + 1; ++i)
        if (small[i])
            for (std::uint64_t j = i * i; j <= root + 1; j += i) small[j] = 0;
    std::vector<std::uint32_t> base;
    for (std::uint64_t i = 2; i <= root + 1 && i <= bound; ++i)
        if (small[i]) base.push_back(static_cast<std::uint32_t>(i));

    const std::uint64_t segment = 1 << 18;
    std::vector<char> seg(segment);
    for (std::uint64_t low = 2; low <= bound; low += segment) {
        std::uint64_t high = std::min(low + segment - 1, bound);
        std::fill(seg.begin(), seg.end(), 1);
        for (std::uint32_t p : base) {
            std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
            if (pp > high) break;
            std::uint64_t start = std::max(pp, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (std::uint64_t v = low; v <= high; ++v)
            if (seg[v - low]) out.primes.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

namespace {
std::mutex g_prime_mutex;
std::shared_ptr<const PrimeList> g_prime_cache;
} // namespace

std::shared_ptr<const PrimeList> shared_primes(std::uint64_t bound) {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    if (!g_prime_cache || g_prime_cache->bound < bound) {
        auto fresh = std::make_shared<PrimeList>(sieve(bound));
        g_prime_cache = std::move(fresh);
    }
    return g_prime_cache;
}

} // namespace ldist
