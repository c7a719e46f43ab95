#include "ldist/characters.hpp"
#include "ldist/primes.hpp"

#include <fftw3.h>

#include <mutex>

namespace ldist {

namespace {

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % m;
        b = (__uint128_t)b * b % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t p = 2; (std::uint64_t)p * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// FFTW's planner is not thread-safe; execution of a finished plan is.
std::mutex g_fftw_mutex;

} // namespace

CharacterTable build_table(std::uint32_t q) {
    if (q < 3 || !is_prime_u32(q)) throw not_prime_error(q);

    const std::uint32_t m = q - 1;
    const auto factors = prime_factors(m);

    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (std::uint32_t r : factors) {
            if (powmod64(cand, m / r, q) == 1) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }

    CharacterTable t;
    t.q = q;
    t.g = g;
    t.ind.assign(m, 0);
    std::uint64_t val = 1;
    for (std::uint32_t e = 0; e < m; ++e) {
        t.ind[val - 1] = e;
        val = val * g % q;
    }
    return t;
}

std::uint32_t CharacterTable::index_of(std::uint64_t n) const {
    std::uint64_t r = n % q;
    if (r == 0) throw validation_error("character argument divisible by q");
    return ind[r - 1];
}

complex char_value(const CharacterTable& t, std::uint32_t j, std::uint64_t n) {
    if (j > t.q - 2) throw validation_error("character index j out of range");
    const std::uint32_t m = t.q - 1;
    std::uint64_t e = (std::uint64_t)j * t.index_of(n) % m;
    return unit_e(static_cast<double>(e) / m);
}

std::vector<complex> char_sums_all(const CharacterTable& t, const BinnedWeights& w) {
    const std::uint32_t n = t.q - 1;
    if (w.q != t.q || w.w.size() != n)
        throw validation_error("char_sums_all: weight vector length mismatch");

    std::vector<complex> out(n);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_plan plan = fftw_plan_dft_1d(
            static_cast<int>(n),
            reinterpret_cast<fftw_complex*>(const_cast<complex*>(w.w.data())),
            reinterpret_cast<fftw_complex*>(out.data()),
            FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace ldist
