#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <vector>

#include "packrho/distance.hpp"
#include "packrho/graph.hpp"

namespace packrho {

// Processing order for the greedy pass. All tie-breaking lives here; the
// engine itself is deterministic given (graph, order).
struct VertexOrder {
    std::vector<int> seq;

    static VertexOrder identity(int n) {
        VertexOrder o;
        o.seq.resize(n);
        std::iota(o.seq.begin(), o.seq.end(), 0);
        return o;
    }

    static VertexOrder of(std::vector<int> seq, int n) {
        std::vector<char> seen(n, 0);
        if (static_cast<int>(seq.size()) != n)
            throw BadParametersError("order must list every vertex exactly once");
        for (int v : seq) {
            if (v < 0 || v >= n || seen[v])
                throw BadParametersError("order is not a permutation of the vertices");
            seen[v] = 1;
        }
        VertexOrder o;
        o.seq = std::move(seq);
        return o;
    }
};

// Per-vertex bit array over colors 1..n; bit c-1 set means color c is still
// available. Rows of colored vertices are left frozen.
struct AvailabilityTable {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit AvailabilityTable(int n_ = 0) : n(n_), words((n_ + 63) / 64) {
        bits.assign(static_cast<std::size_t>(n) * words, ~std::uint64_t{0});
        // mask tail bits beyond color n
        if (n % 64 != 0 && words > 0) {
            std::uint64_t tail = (std::uint64_t{1} << (n % 64)) - 1;
            for (int v = 0; v < n; ++v) bits[row(v) + words - 1] = tail;
        }
    }

    std::size_t row(int v) const { return static_cast<std::size_t>(v) * words; }

    bool available(int v, int color) const {
        int b = color - 1;
        return (bits[row(v) + b / 64] >> (b % 64)) & 1;
    }

    void remove(int v, int color) {
        int b = color - 1;
        bits[row(v) + b / 64] &= ~(std::uint64_t{1} << (b % 64));
    }

    int first_available(int v) const {
        std::size_t r = row(v);
        for (int w = 0; w < words; ++w)
            if (bits[r + w]) return w * 64 + std::countr_zero(bits[r + w]) + 1;
        return 0;  // cannot happen: color n is only excluded by n-1 others
    }
};

// One vertex per color in vertex-id order; colors 1..k, color k used.
struct PackingColoring {
    std::vector<int> colors;
    int k = 0;
};

// First-fit packing coloring. Each processed vertex takes its smallest
// available color c, then a BFS truncated at depth c withdraws c from every
// uncolored vertex within distance c.
inline PackingColoring greedy_color(const Graph& g, const VertexOrder& order,
                                    AvailabilityTable* table_out = nullptr) {
    int n = g.n;
    AvailabilityTable avail(n);
    PackingColoring out;
    out.colors.assign(n, 0);
    std::vector<int> depth(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    std::vector<int> touched;
    touched.reserve(n);
    for (int v : order.seq) {
        int c = avail.first_available(v);
        out.colors[v] = c;
        out.k = std::max(out.k, c);
        // truncated BFS from v
        queue.clear();
        touched.clear();
        queue.push_back(v);
        depth[v] = 0;
        touched.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (depth[u] == c) break;  // deeper levels are beyond reach
            for (int w : g.adj[u]) {
                if (depth[w] >= 0) continue;
                depth[w] = depth[u] + 1;
                touched.push_back(w);
                queue.push_back(w);
                if (out.colors[w] == 0) avail.remove(w, c);
            }
        }
        for (int u : touched) depth[u] = -1;
    }
    if (table_out) *table_out = std::move(avail);
    return out;
}

struct PackingViolation {
    int u = -1;
    int v = -1;
    int color = 0;
};

namespace detail {

inline void require_total(const PackingColoring& c, int n) {
    if (static_cast<int>(c.colors.size()) != n)
        throw UncoloredVertexError(static_cast<int>(c.colors.size()));
    for (int v = 0; v < n; ++v)
        if (c.colors[v] <= 0) throw UncoloredVertexError(v);
}

}  // namespace detail

// nullopt means the coloring is a valid packing coloring; otherwise the
// first violating pair in lexicographic (u, v) order.
inline std::optional<PackingViolation> verify_packing_coloring(
    const Graph& g, const DistanceMatrix& dm, const PackingColoring& c) {
    detail::require_total(c, g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (c.colors[u] == c.colors[v] && dm.at(u, v) <= c.colors[u])
                return PackingViolation{u, v, c.colors[u]};
    return std::nullopt;
}

inline std::optional<PackingViolation> verify_packing_coloring(
    const Graph& g, const PackingColoring& c) {
    return verify_packing_coloring(g, all_pairs_distances(g), c);
}

// Greedy validity: a packing coloring is reachable by the first-fit pass iff
// every vertex of color i sees each smaller color j within distance j.
struct GreedyCheck {
    enum class Status { ok, not_packing, missing_color };
    Status status = Status::ok;
    PackingViolation violation;  // when not_packing
    int vertex = -1;             // when missing_color
    int missing_color = 0;

    bool ok() const { return status == Status::ok; }
};

inline GreedyCheck verify_greedy_packing_coloring(const Graph& g,
                                                  const DistanceMatrix& dm,
                                                  const PackingColoring& c) {
    GreedyCheck out;
    if (auto viol = verify_packing_coloring(g, dm, c)) {
        out.status = GreedyCheck::Status::not_packing;
        out.violation = *viol;
        return out;
    }
    for (int v = 0; v < g.n; ++v) {
        for (int j = 1; j < c.colors[v]; ++j) {
            bool seen = false;
            for (int u = 0; u < g.n && !seen; ++u)
                seen = u != v && c.colors[u] == j && dm.at(u, v) <= j;
            if (!seen) {
                out.status = GreedyCheck::Status::missing_color;
                out.vertex = v;
                out.missing_color = j;
                return out;
            }
        }
    }
    return out;
}

inline GreedyCheck verify_greedy_packing_coloring(const Graph& g,
                                                  const PackingColoring& c) {
    return verify_greedy_packing_coloring(g, all_pairs_distances(g), c);
}

// Ordered color classes V_1..V_k, the layered view of a coloring.
struct LayeredPartition {
    int n = 0;
    std::vector<std::vector<int>> layers;  // 0-based index = color - 1

    int k() const { return static_cast<int>(layers.size()); }
};

inline LayeredPartition to_layers(const PackingColoring& c) {
    LayeredPartition lp;
    lp.n = static_cast<int>(c.colors.size());
    detail::require_total(c, lp.n);
    lp.layers.assign(c.k, {});
    for (int v = 0; v < lp.n; ++v) lp.layers[c.colors[v] - 1].push_back(v);
    return lp;
}

inline PackingColoring from_layers(const LayeredPartition& lp) {
    PackingColoring c;
    c.colors.assign(lp.n, 0);
    c.k = lp.k();
    for (int i = 0; i < lp.k(); ++i)
        for (int v : lp.layers[i]) {
            if (v < 0 || v >= lp.n || c.colors[v] != 0)
                throw BadParametersError("layers must partition the vertex set");
            c.colors[v] = i + 1;
        }
    detail::require_total(c, lp.n);
    return c;
}

}  // namespace packrho
