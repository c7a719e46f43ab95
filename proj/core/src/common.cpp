#include "ldist/common.hpp"
#include "ldist/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <thread>

namespace ldist {

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

namespace {
std::size_t g_threads = 0; // 0 = unset

std::size_t default_threads() {
    if (const char* env = std::getenv("LDIST_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    std::size_t hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}
} // namespace

std::size_t thread_count() {
    return g_threads ? g_threads : default_threads();
}

void set_thread_count(std::size_t n) { g_threads = n; }

void parallel_chunks(std::size_t n, std::size_t grain,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (grain == 0) grain = 1;
    const std::size_t nchunks = chunk_count(n, grain);
    const std::size_t nthreads = std::min(thread_count(), nchunks);
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * grain, std::min((c + 1) * grain, n));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            fn(c, c * grain, std::min((c + 1) * grain, n));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    for (std::size_t i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace ldist
