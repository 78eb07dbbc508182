#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "packrho/graph.hpp"

namespace packrho {

// SplitMix64 (Steele/Lea/Flood). Every random choice in the project flows
// from one explicit 64-bit seed through this generator; `split` derives an
// independent child stream so parallel work stays deterministic.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next()); }

    // Unbiased uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stream for one unit of parallel work: a function of (seed, index) only,
// so results never depend on how work was sliced across workers.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 a(seed);
    SplitMix64 b(~index);
    return SplitMix64(a.next() ^ b.next());
}

inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[static_cast<int>(rng.below(i + 1))]);
    return p;
}

namespace detail {

// Pair index <-> (i, j), i < j, ordered (0,1),(0,2),(1,2),(0,3),... i.e. by
// column j then row i. The same order the graph6 encoding walks.
inline Edge pair_from_index(long long idx) {
    long long j = 1;
    while (j * (j + 1) / 2 <= idx) ++j;
    long long i = idx - j * (j - 1) / 2;
    return {static_cast<int>(i), static_cast<int>(j)};
}

}  // namespace detail

// Uniform simple graph with exactly m edges (Floyd's distinct sampling),
// fully determined by the seed.
inline Graph random_graph(int n, long long m, std::uint64_t seed) {
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (n < 0 || m < 0 || m > max_m)
        throw BadParametersError("random_graph: need 0 <= m <= n(n-1)/2");
    SplitMix64 rng(seed);
    std::set<long long> chosen;
    for (long long j = max_m - m; j < max_m; ++j) {
        long long t = static_cast<long long>(rng.below(j + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (long long idx : chosen) edges.push_back(detail::pair_from_index(idx));
    return Graph::from_edges(n, edges);
}

// G(n,p): each pair independently with probability p.
inline Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw BadParametersError("random_gnp: need n >= 0 and p in [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.unit() < p) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace packrho
