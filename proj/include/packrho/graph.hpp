#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "packrho/core.hpp"

namespace packrho {

using Edge = std::pair<int, int>;

// Subsets of vertices on small graphs are packed into one machine word.
using VMask = std::uint64_t;

inline VMask vbit(int v) { return VMask{1} << v; }

inline std::vector<int> mask_to_vertices(VMask s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

inline VMask vertices_to_mask(const std::vector<int>& vs) {
    VMask s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

// Simple undirected graph: sorted adjacency lists always, plus one-word
// adjacency bitsets when n <= 64 (used by the exhaustive searches).
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<VMask> adj_bits;  // empty when n > 64

    Graph() = default;

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw BadParametersError("vertex count must be non-negative");
        Graph g;
        g.n = n;
        g.adj.assign(n, {});
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw BadParametersError("edge endpoint out of range");
            if (u == v) throw BadParametersError("loops are not allowed");
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& nb : g.adj) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        g.rebuild_bits();
        return g;
    }

    void rebuild_bits() {
        adj_bits.clear();
        if (n > 64) return;
        adj_bits.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : adj[v]) adj_bits[v] |= vbit(u);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    long long edge_count() const {
        long long m = 0;
        for (const auto& nb : adj) m += static_cast<long long>(nb.size());
        return m / 2;
    }

    bool has_edge(int u, int v) const {
        if (!adj_bits.empty()) return (adj_bits[u] & vbit(v)) != 0;
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

inline bool has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) return true;
    return false;
}

// Component ids, 0-based in order of discovery from vertex 0 upward.
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto comp = component_ids(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

// One connected component as a standalone graph, keeping the mapping back
// to the original vertex ids.
struct Component {
    Graph graph;
    std::vector<int> vertices;  // component-local id -> original id
};

inline std::vector<Component> components(const Graph& g) {
    auto comp = component_ids(g);
    int count = g.n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<Component> out(count);
    std::vector<int> local(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        local[v] = static_cast<int>(out[comp[v]].vertices.size());
        out[comp[v]].vertices.push_back(v);
    }
    for (int c = 0; c < count; ++c) {
        std::vector<Edge> edges;
        for (int v : out[c].vertices)
            for (int u : g.adj[v])
                if (v < u) edges.emplace_back(local[v], local[u]);
        out[c].graph = Graph::from_edges(static_cast<int>(out[c].vertices.size()), edges);
    }
    return out;
}

}  // namespace packrho
