#pragma once

#include <vector>

#include "packrho/graph.hpp"

namespace packrho {

// All-pairs hop distances, one BFS per source. kUnreachable marks pairs in
// different components.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    int& at(int u, int v) { return d[static_cast<std::size_t>(u) * n + v]; }
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.assign(static_cast<std::size_t>(g.n) * g.n, kUnreachable);
    std::vector<int> queue;
    queue.reserve(g.n);
    for (int s = 0; s < g.n; ++s) {
        queue.clear();
        queue.push_back(s);
        dm.at(s, s) = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            int du = dm.at(s, u);
            for (int w : g.adj[u]) {
                if (dm.at(s, w) == kUnreachable) {
                    dm.at(s, w) = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dm;
}

// Eccentricities and derived quantities. On a disconnected graph every
// eccentricity (hence rad and diam) is kUnreachable and `connected` is false;
// nothing throws.
struct Metrics {
    bool connected = true;
    std::vector<int> ecc;
    int rad = 0;
    int diam = 0;
    std::vector<int> central;
    std::vector<int> diametrical;
    std::vector<Edge> diametrical_pairs;
};

inline Metrics metrics(const Graph& g, const DistanceMatrix& dm) {
    Metrics m;
    m.ecc.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u = 0; u < g.n; ++u) m.ecc[v] = std::max(m.ecc[v], dm.at(v, u));
    m.connected = g.n == 0 ||
                  std::none_of(m.ecc.begin(), m.ecc.end(),
                               [](int e) { return e == kUnreachable; });
    if (g.n == 0) return m;
    m.rad = *std::min_element(m.ecc.begin(), m.ecc.end());
    m.diam = *std::max_element(m.ecc.begin(), m.ecc.end());
    if (!m.connected) {
        m.rad = kUnreachable;
        m.diam = kUnreachable;
        return m;
    }
    for (int v = 0; v < g.n; ++v) {
        if (m.ecc[v] == m.rad) m.central.push_back(v);
        if (m.ecc[v] == m.diam) m.diametrical.push_back(v);
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (dm.at(u, v) == m.diam) m.diametrical_pairs.emplace_back(u, v);
    return m;
}

inline Metrics metrics(const Graph& g) { return metrics(g, all_pairs_distances(g)); }

}  // namespace packrho
