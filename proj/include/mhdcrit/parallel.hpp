#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mhdcrit {

/// Data-parallel width: hardware concurrency capped by MHDCRIT_THREADS.
inline int max_threads() {
    static const int cached = [] {
        unsigned hw = std::thread::hardware_concurrency();
        int n = hw == 0 ? 1 : static_cast<int>(hw);
        if (const char* env = std::getenv("MHDCRIT_THREADS")) {
            int cap = std::atoi(env);
            if (cap >= 1) n = std::min(n, cap);
        }
        return n;
    }();
    return cached;
}

/// Chunked loop over [0, count). fn(begin, end) must be independent per
/// index so the result cannot depend on the chunking. Reductions stay
/// serial elsewhere; this is for elementwise maps only.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, std::size_t grain = 16384) {
    const int nt = max_threads();
    if (nt <= 1 || count <= grain) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t chunks =
        std::min<std::size_t>(static_cast<std::size_t>(nt), (count + grain - 1) / grain);
    const std::size_t per = (count + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t b = c * per;
        const std::size_t e = std::min(count, b + per);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace mhdcrit
