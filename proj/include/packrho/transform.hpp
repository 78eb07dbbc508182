#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "packrho/distance.hpp"
#include "packrho/graph.hpp"

namespace packrho {

// G^level: same vertices, edge iff 0 < d(u,v) <= level.
struct PowerGraph {
    int level = 1;
    Graph result;
};

inline PowerGraph power_graph(const Graph& g, const DistanceMatrix& dm, int level) {
    if (level < 1) throw BadParametersError("power level must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (dm.at(u, v) <= level) edges.emplace_back(u, v);
    return PowerGraph{level, Graph::from_edges(g.n, edges)};
}

inline PowerGraph power_graph(const Graph& g, int level) {
    return power_graph(g, all_pairs_distances(g), level);
}

// The layered graph on k copies of V(G): level-i copy carries the edges of
// G^i, and the k copies of each vertex form a clique. Adjacency is answered
// from (level, base-distance) predicates; materialize() builds the explicit
// graph for small instances.
struct GkGraph {
    int n = 0;
    int k = 0;
    DistanceMatrix dist;

    int node_count() const { return n * k; }
    int node_of(int v, int level) const { return (level - 1) * n + v; }
    int base_vertex(int node) const { return node % n; }
    int level_of(int node) const { return node / n + 1; }

    bool adjacent(int a, int b) const {
        if (a == b) return false;
        int u = base_vertex(a), v = base_vertex(b);
        int la = level_of(a), lb = level_of(b);
        if (u == v) return true;  // clique Q_v across levels
        if (la != lb) return false;
        return dist.at(u, v) <= la;
    }

    Graph materialize() const {
        std::vector<Edge> edges;
        for (int a = 0; a < node_count(); ++a)
            for (int b = a + 1; b < node_count(); ++b)
                if (adjacent(a, b)) edges.emplace_back(a, b);
        return Graph::from_edges(node_count(), edges);
    }
};

inline GkGraph build_gk(const Graph& g, int k) {
    if (k < 1 || k > std::max(g.n, 1))
        throw BadParametersError("level count must satisfy 1 <= k <= n");
    return GkGraph{g.n, k, all_pairs_distances(g)};
}

// D(G): edges are exactly the diametrical pairs.
inline Graph diametrical_graph(const Graph& g, const DistanceMatrix& dm) {
    auto m = metrics(g, dm);
    if (!m.connected) throw DisconnectedError("diametrical graph needs a connected graph");
    return Graph::from_edges(g.n, m.diametrical_pairs);
}

inline Graph diametrical_graph(const Graph& g) {
    return diametrical_graph(g, all_pairs_distances(g));
}

// Level map V -> 1..k; equivalently an independent set of G(k) hitting every
// clique Q_v once. Valid iff each level-i class is an i-packing.
struct LevelAssignment {
    std::vector<int> level;
    int k = 0;
};

inline bool is_valid_assignment(const DistanceMatrix& dm, const LevelAssignment& a) {
    int n = static_cast<int>(a.level.size());
    for (int v = 0; v < n; ++v)
        if (a.level[v] < 1 || a.level[v] > a.k) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.level[u] == a.level[v] && dm.at(u, v) <= a.level[u]) return false;
    return true;
}

inline LevelAssignment assignment_from_coloring(const std::vector<int>& colors, int k) {
    return LevelAssignment{colors, k};
}

struct LayeredDefect {
    bool ok = true;
    int level = 0;   // smallest failing level
    int vertex = -1; // extendable vertex of smallest id
};

namespace detail {

// Candidates that could extend class `lvl`: vertices above the level whose
// distance to every class member exceeds lvl. Ascending (level, id).
inline std::vector<int> extend_candidates(const DistanceMatrix& dm,
                                          const LevelAssignment& a, int lvl) {
    int n = static_cast<int>(a.level.size());
    std::vector<int> cands;
    for (int z = 0; z < n; ++z) {
        if (a.level[z] <= lvl) continue;
        bool fits = true;
        for (int u = 0; u < n && fits; ++u)
            if (a.level[u] == lvl && dm.at(z, u) <= lvl) fits = false;
        if (fits) cands.push_back(z);
    }
    std::sort(cands.begin(), cands.end(), [&](int x, int y) {
        return a.level[x] != a.level[y] ? a.level[x] < a.level[y] : x < y;
    });
    return cands;
}

}  // namespace detail

// Checks that class i is a maximal independent set of G^i minus the lower
// classes, for every i in 1..k-1.
inline LayeredDefect is_layered_maximal(const DistanceMatrix& dm,
                                        const LevelAssignment& a) {
    for (int lvl = 1; lvl < a.k; ++lvl) {
        auto cands = detail::extend_candidates(dm, a, lvl);
        if (!cands.empty()) {
            int z = *std::min_element(cands.begin(), cands.end());
            return LayeredDefect{false, lvl, z};
        }
    }
    return LayeredDefect{};
}

inline int top_level(const LevelAssignment& a) {
    int top = 0;
    for (int l : a.level) top = std::max(top, l);
    return top;
}

struct DmpOutcome {
    LevelAssignment assignment;
    int top_level = 0;
};

// Exchange loop: repeatedly take the smallest non-maximal level and pull one
// eligible vertex down into it. Chooser picks among the sorted candidates;
// the default takes the first (lowest level, then lowest id). Terminates
// because every exchange strictly lowers one vertex's level.
template <class Chooser>
DmpOutcome dmp_run(const DistanceMatrix& dm, LevelAssignment a, Chooser&& choose) {
    for (;;) {
        LayeredDefect d = is_layered_maximal(dm, a);
        if (d.ok) break;
        auto cands = detail::extend_candidates(dm, a, d.level);
        int z = cands[choose(cands)];
        a.level[z] = d.level;
    }
    return DmpOutcome{a, top_level(a)};
}

inline DmpOutcome dmp_run(const DistanceMatrix& dm, LevelAssignment a) {
    return dmp_run(dm, std::move(a), [](const std::vector<int>&) { return 0; });
}

inline constexpr int kDmpRunTreeLimit = 10;

using DmpMemo = std::unordered_map<std::uint64_t, int>;

namespace detail {

inline std::uint64_t encode_levels(const LevelAssignment& a) {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < a.level.size(); ++v)
        key |= static_cast<std::uint64_t>(a.level[v] - 1) << (4 * v);
    return key;
}

inline int dmp_value_rec(const DistanceMatrix& dm, LevelAssignment& a, DmpMemo& memo) {
    std::uint64_t key = encode_levels(a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best;
    LayeredDefect d = is_layered_maximal(dm, a);
    if (d.ok) {
        best = top_level(a);
    } else {
        best = 0;
        for (int z : extend_candidates(dm, a, d.level)) {
            int old = a.level[z];
            a.level[z] = d.level;
            best = std::max(best, dmp_value_rec(dm, a, memo));
            a.level[z] = old;
        }
    }
    memo.emplace(key, best);
    return best;
}

}  // namespace detail

// Maximum top level over every resolution of the exchange loop (the run tree
// branches on the choice of pulled-down vertex). Memoized on the level map.
inline int dmp_value(const DistanceMatrix& dm, const LevelAssignment& a,
                     DmpMemo* shared_memo = nullptr) {
    int n = static_cast<int>(a.level.size());
    if (n > kDmpRunTreeLimit)
        throw SizeLimitError("DMP run-tree exploration", n, kDmpRunTreeLimit);
    DmpMemo local;
    DmpMemo& memo = shared_memo ? *shared_memo : local;
    LevelAssignment work = a;
    return detail::dmp_value_rec(dm, work, memo);
}

// Resolve one run that attains dmp_value, returning its terminal assignment
// (used to decode certificates). Children of every visited state are in the
// memo once dmp_value has run.
inline LevelAssignment dmp_best_terminal(const DistanceMatrix& dm,
                                         const LevelAssignment& a, DmpMemo& memo) {
    LevelAssignment cur = a;
    int target = dmp_value(dm, cur, &memo);
    for (;;) {
        LayeredDefect d = is_layered_maximal(dm, cur);
        if (d.ok) return cur;
        bool advanced = false;
        for (int z : detail::extend_candidates(dm, cur, d.level)) {
            int old = cur.level[z];
            cur.level[z] = d.level;
            if (dmp_value(dm, cur, &memo) == target) {
                advanced = true;
                break;
            }
            cur.level[z] = old;
        }
        if (!advanced) throw Error("run-tree replay lost the target value");
    }
}

}  // namespace packrho
