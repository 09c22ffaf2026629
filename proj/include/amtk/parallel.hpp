#ifndef AMTK_PARALLEL_HPP
#define AMTK_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace amtk {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [begin, end) into one contiguous chunk per worker and runs
// fn(worker, lo, hi). Workers must write only worker-local state; callers
// merge in worker order so results never depend on the thread count.
template <typename Fn>
void parallel_chunks(uint64_t begin, uint64_t end, unsigned threads, Fn&& fn) {
    uint64_t total = end - begin;
    unsigned t = resolve_threads(threads);
    if (t > total) t = total ? unsigned(total) : 1;
    if (t <= 1) {
        fn(0u, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    uint64_t chunk = total / t, extra = total % t, lo = begin;
    for (unsigned i = 0; i < t; ++i) {
        uint64_t hi = lo + chunk + (i < extra ? 1 : 0);
        pool.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

}  // namespace amtk

#endif
