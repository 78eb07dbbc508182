#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace packrho {

// Worker count: PACKRHO_THREADS env var wins, then hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("PACKRHO_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Split [begin, end) into `threads` contiguous chunks and run
// f(chunk_index, lo, hi) on each. Chunk boundaries depend only on the range
// and the chunk count, so per-chunk results merge deterministically.
template <class F>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads, F&& f) {
    std::uint64_t total = end - begin;
    if (threads < 1) threads = 1;
    if (total == 0) return;
    if (threads == 1 || total < 2) {
        f(0, begin, end);
        return;
    }
    std::uint64_t nchunks = std::min<std::uint64_t>(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t lo = begin + total * c / nchunks;
        std::uint64_t hi = begin + total * (c + 1) / nchunks;
        pool.emplace_back([&f, c, lo, hi] { f(static_cast<int>(c), lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace packrho
