#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace zonocone {

inline int thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Run fn(begin, end, chunk) over a contiguous chunking of [0, n).
/// Chunk indices are dense from 0, so callers can merge results in
/// deterministic order.
template <class Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
    if (n == 0) return;
    std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(thread_count(threads)), n);
    if (nchunks <= 1) {
        fn(std::size_t{0}, n, std::size_t{0});
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    std::size_t per = n / nchunks, extra = n % nchunks, begin = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t len = per + (c < extra ? 1 : 0);
        workers.emplace_back([&fn, begin, len, c] { fn(begin, begin + len, c); });
        begin += len;
    }
    for (auto& w : workers) w.join();
}

}  // namespace zonocone
