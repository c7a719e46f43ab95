#pragma once

#include <cstddef>
#include <functional>

namespace ldist {

/// Number of worker threads. Defaults to hardware concurrency, overridable
/// via set_thread_count() or the LDIST_THREADS environment variable.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Run fn(begin, end) over disjoint chunks of [0, n) on the worker pool.
/// Chunk boundaries depend only on n and grain, never on the thread count,
/// so per-chunk results can be combined deterministically by the caller.
void parallel_chunks(std::size_t n, std::size_t grain,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Fixed chunk count for deterministic reductions: chunk i covers
/// [i*grain, min((i+1)*grain, n)).
inline std::size_t chunk_count(std::size_t n, std::size_t grain) {
    return n == 0 ? 0 : (n + grain - 1) / grain;
}

} // namespace ldist
