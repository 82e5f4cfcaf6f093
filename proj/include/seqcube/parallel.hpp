#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace seqcube {

/// Worker count from SEQCUBE_WORKERS, else hardware concurrency, always >= 1.
int default_workers();

/// Runs fn(chunk_index, lo, hi) over contiguous chunks of [begin, end) and
/// returns the per-chunk results in chunk order. Deterministic-reduction
/// contract: callers merge the ordered results with an associative fold, so
/// the outcome is identical for every worker count.
template <typename R, typename Fn>
std::vector<R> parallel_chunks(std::uint64_t begin, std::uint64_t end, int workers, Fn fn) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    if (workers <= 0) workers = default_workers();
    std::uint64_t chunks = static_cast<std::uint64_t>(workers);
    if (chunks > total) chunks = total ? total : 1;

    std::vector<R> results(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    if (chunks <= 1) {
        results[0] = fn(std::size_t{0}, begin, end);
        return results;
    }

    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::uint64_t base = total / chunks;
    const std::uint64_t rem = total % chunks;
    std::uint64_t lo = begin;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t hi = lo + base + (c < rem ? 1 : 0);
        pool.emplace_back([&, c, lo, hi] {
            try {
                results[c] = fn(static_cast<std::size_t>(c), lo, hi);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);  // first failing chunk wins, deterministically
    return results;
}

}  // namespace seqcube
