#ifndef ZSF_PARALLEL_HPP
#define ZSF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace zsf {

// Worker count: ZSF_JOBS env var, else hardware concurrency, at least 1.
int default_jobs();

// Splits [0, total) into chunks, runs chunk(begin, end) on a small thread
// pool, and folds the per-chunk results IN CHUNK ORDER, so any
// deterministic chunk function yields a deterministic reduction.
template <class Result, class ChunkFn, class MergeFn>
Result parallel_reduce(std::uint64_t total, int jobs, Result init, ChunkFn chunk, MergeFn merge) {
    if (total == 0) return init;
    jobs = std::max(1, std::min({jobs, 256, static_cast<int>(total)}));
    if (jobs == 1) return merge(std::move(init), chunk(0, total));

    const std::uint64_t nchunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 4);
    const std::uint64_t per = (total + nchunks - 1) / nchunks;
    std::vector<Result> results(nchunks);
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                const std::uint64_t begin = c * per;
                const std::uint64_t end = std::min(total, begin + per);
                if (begin < end) results[c] = chunk(begin, end);
            }
        });
    }
    for (auto& t : pool) t.join();
    Result acc = std::move(init);
    for (auto& r : results) acc = merge(std::move(acc), std::move(r));
    return acc;
}

} // namespace zsf

#endif
