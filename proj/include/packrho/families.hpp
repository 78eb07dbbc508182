#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "packrho/graph.hpp"
#include "packrho/rng.hpp"

namespace packrho {

// Named generators. Vertex numbering is part of the contract:
//   path/cycle: 0..n-1 along the walk
//   complete_bipartite(s, t): sides 0..s-1 and s..s+t-1
//   star(n) = complete_bipartite(n-1, 1): leaves first, center last
//   knn_minus_matching(n): u_i = i, v_i = n+i, edges u_i v_j for i != j
//   split(p, r): clique 0..p-1, independent set p..p+r-1
//   cube: vertices are 3-bit labels, edges flip one bit
//   join(g, h): g's vertices first, then h's

inline Graph path_graph(int n) {
    if (n < 1) throw BadParametersError("path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw BadParametersError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw BadParametersError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw BadParametersError("bipartite sides must be >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
    return Graph::from_edges(s + t, e);
}

inline Graph star_graph(int n) {
    if (n < 2) throw BadParametersError("star needs n >= 2");
    return complete_bipartite(n - 1, 1);
}

inline Graph knn_minus_matching(int n) {
    if (n < 2) throw BadParametersError("K_{n,n} minus matching needs n >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) e.emplace_back(i, n + j);
    return Graph::from_edges(2 * n, e);
}

inline Graph cube_graph() {
    std::vector<Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return Graph::from_edges(8, e);
}

inline Graph join_graphs(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(a.n + u, a.n + v);
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v) e.emplace_back(u, a.n + v);
    return Graph::from_edges(a.n + b.n, e);
}

// Random split graph: full clique, independent set, each cross pair kept
// with probability 1/2 under the seed.
inline Graph split_graph(int p, int r, std::uint64_t seed) {
    if (p < 1 || r < 1) throw BadParametersError("split graph needs p, r >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> e;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.emplace_back(i, j);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j)
            if (rng.next() & 1) e.emplace_back(i, p + j);
    return Graph::from_edges(p + r, e);
}

// Worked examples used throughout: a 6-vertex greedy-trace graph, a
// 10-vertex diameter-3 graph exercising the diametrical machinery, and an
// 8-vertex graph with Gamma = n - 1 of radius 3.
inline Graph fig1_graph() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}

inline Graph fig2_graph() {
    return Graph::from_edges(
        10, {// outer 9-cycle a-b-c-d-h-g-i-f-e
             {0, 1}, {1, 2}, {2, 3}, {3, 7}, {7, 6}, {6, 8}, {8, 5}, {5, 4}, {4, 0},
             // inner triangle b,f,h
             {1, 5}, {1, 7}, {5, 7},
             // center j to all six middle vertices
             {9, 1}, {9, 2}, {9, 4}, {9, 5}, {9, 6}, {9, 7},
             // long chords through the center
             {1, 6}, {4, 7}, {2, 5},
             // short chords
             {1, 4}, {2, 7}, {5, 6}});
}

inline Graph fig3_graph() {
    return Graph::from_edges(8, {{7, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {0, 3},
                                 {3, 4}, {4, 6}, {5, 6}, {2, 5}});
}

// Textual family specs, e.g. "cycle:6", "split:4,3,7", "join(path:4,path:4)".
struct FamilySpec {
    std::string family;
    std::vector<long long> iparams;
    double p = 0.5;          // erdos_renyi edge probability
    std::uint64_t seed = 0;  // split / erdos_renyi
    std::vector<FamilySpec> operands;
};

namespace detail {

inline std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace detail

inline FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    std::string s = text;
    if (s.rfind("join(", 0) == 0 && s.back() == ')') {
        spec.family = "join";
        for (const auto& arg : detail::split_args(s.substr(5, s.size() - 6)))
            spec.operands.push_back(parse_family_spec(arg));
        if (spec.operands.size() != 2)
            throw BadParametersError("join takes exactly two operand specs");
        return spec;
    }
    auto colon = s.find(':');
    spec.family = s.substr(0, colon == std::string::npos ? s.size() : colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) args = detail::split_args(s.substr(colon + 1));
    auto as_ll = [](const std::string& a) {
        std::size_t used = 0;
        long long v = std::stoll(a, &used);
        if (used != a.size()) throw BadParametersError("bad integer parameter: " + a);
        return v;
    };
    if (spec.family == "erdos_renyi") {
        if (args.size() != 3)
            throw BadParametersError("erdos_renyi takes n,p,seed");
        spec.iparams.push_back(as_ll(args[0]));
        spec.p = std::stod(args[1]);
        spec.seed = static_cast<std::uint64_t>(std::stoull(args[2]));
        return spec;
    }
    if (spec.family == "split") {
        if (args.size() != 3) throw BadParametersError("split takes p,r,seed");
        spec.iparams.push_back(as_ll(args[0]));
        spec.iparams.push_back(as_ll(args[1]));
        spec.seed = static_cast<std::uint64_t>(std::stoull(args[2]));
        return spec;
    }
    for (const auto& a : args) spec.iparams.push_back(as_ll(a));
    return spec;
}

inline Graph generate(const FamilySpec& spec) {
    auto want = [&](std::size_t k, const char* usage) {
        if (spec.iparams.size() != k)
            throw BadParametersError(std::string("expected ") + usage);
    };
    const auto& ip = spec.iparams;
    if (spec.family == "path") {
        want(1, "path:n");
        return path_graph(static_cast<int>(ip[0]));
    }
    if (spec.family == "cycle") {
        want(1, "cycle:n");
        return cycle_graph(static_cast<int>(ip[0]));
    }
    if (spec.family == "complete") {
        want(1, "complete:n");
        return complete_graph(static_cast<int>(ip[0]));
    }
    if (spec.family == "complete_bipartite") {
        want(2, "complete_bipartite:s,t");
        return complete_bipartite(static_cast<int>(ip[0]), static_cast<int>(ip[1]));
    }
    if (spec.family == "star") {
        want(1, "star:n");
        return star_graph(static_cast<int>(ip[0]));
    }
    if (spec.family == "knn_minus_matching") {
        want(1, "knn_minus_matching:n");
        return knn_minus_matching(static_cast<int>(ip[0]));
    }
    if (spec.family == "cube") {
        want(0, "cube");
        return cube_graph();
    }
    if (spec.family == "fig1") {
        want(0, "fig1");
        return fig1_graph();
    }
    if (spec.family == "fig2") {
        want(0, "fig2");
        return fig2_graph();
    }
    if (spec.family == "fig3") {
        want(0, "fig3");
        return fig3_graph();
    }
    if (spec.family == "split") {
        want(2, "split:p,r,seed");
        return split_graph(static_cast<int>(ip[0]), static_cast<int>(ip[1]), spec.seed);
    }
    if (spec.family == "erdos_renyi") {
        want(1, "erdos_renyi:n,p,seed");
        return random_gnp(static_cast<int>(ip[0]), spec.p, spec.seed);
    }
    if (spec.family == "join")
        return join_graphs(generate(spec.operands[0]), generate(spec.operands[1]));
    throw BadParametersError("unknown family: " + spec.family);
}

inline Graph generate(const std::string& spec_text) {
    return generate(parse_family_spec(spec_text));
}

}  // namespace packrho
