// Reference implementations kept deliberately independent of the library's
// algorithm choices; the fast paths are checked against these.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using EdgeList = std::vector<std::pair<int, int>>;

// Plain include/exclude recursion with an explicit maximality test at the
// leaves. Quadratic per candidate set, fine for n <= 6.
inline std::set<std::set<int>> slow_maximal_independent_sets(int n, const EdgeList& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    std::set<std::set<int>> out;
    std::vector<int> cur;
    auto compatible = [&](int v) {
        for (int u : cur)
            if (adj[u][v]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            for (int z = 0; z < n; ++z) {
                bool in = false;
                for (int u : cur) in = in || u == z;
                if (!in && compatible(z)) return;  // extendable, not maximal
            }
            out.insert(std::set<int>(cur.begin(), cur.end()));
            return;
        }
        if (compatible(v)) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    return out;
}

// Labeled connected graph count by inclusion-exclusion over the component
// of vertex 1:
//   C(n) = 2^binom(n,2) - sum_{k=1}^{n-1} binom(n-1, k-1) C(k) 2^binom(n-k,2)
inline unsigned long long connected_labeled_count(int n) {
    auto binom = [](int a, int b) {
        unsigned long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::vector<unsigned long long> c(n + 1, 0);
    for (int m = 1; m <= n; ++m) {
        unsigned long long total = 1ULL << (m * (m - 1) / 2);
        for (int k = 1; k < m; ++k)
            total -= binom(m - 1, k - 1) * c[k] * (1ULL << ((m - k) * (m - k - 1) / 2));
        c[m] = total;
    }
    return c[n];
}

// graph6 encoder built from a textual bit string, no shared code with the
// library codec.
inline std::string reference_graph6(int n, const EdgeList& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits += adj[i][j] ? '1' : '0';
    while (bits.size() % 6 != 0) bits += '0';
    std::string out;
    out += static_cast<char>(n + 63);
    for (std::size_t at = 0; at < bits.size(); at += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[at + b] == '1');
        out += static_cast<char>(v + 63);
    }
    return out;
}

}  // namespace oracles
