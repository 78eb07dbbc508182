#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "packrho/coloring.hpp"
#include "packrho/distance.hpp"
#include "packrho/graph.hpp"
#include "packrho/independence.hpp"
#include "packrho/parallel.hpp"
#include "packrho/transform.hpp"

namespace packrho {

struct GammaResult {
    int value = 0;
    LayeredPartition certificate;
    std::string method;
    bool exact = true;  // false when a budget cut the search short
};

struct ChiResult {
    int value = 0;
    PackingColoring certificate;
    std::string method;
    bool exact = true;
};

struct SearchOptions {
    int max_n = 10;
    double budget_seconds = 0;  // 0 = no budget
    int threads = 1;
};

// n - i(G) + 1
inline int gamma_upper_bound(const Graph& g, int limit = kExhaustiveLimit) {
    return g.n - independence_numbers(g, limit).i + 1;
}

namespace detail {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at{};
    bool enabled = false;
    bool expired = false;

    explicit Deadline(double seconds) {
        if (seconds > 0) {
            enabled = true;
            at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(seconds));
        }
    }

    bool check() {
        if (enabled && !expired && Clock::now() > at) expired = true;
        return expired;
    }
};

// Largest finite distance; from this level on every power graph is a
// disjoint union of per-component cliques.
inline int saturation_level(const DistanceMatrix& dm) {
    int sat = 0;
    for (int v : dm.d)
        if (v != kUnreachable) sat = std::max(sat, v);
    return sat;
}

struct LayeringSearch {
    const Graph& g;
    DistanceMatrix dm;
    std::vector<int> comp;
    int ncomp = 0;
    int sat = 0;
    std::vector<std::vector<VMask>> compat;  // per level 1..sat
    int upper = 0;
    Deadline deadline;

    int best = 0;
    std::vector<VMask> best_path;  // masks chosen up to the tail
    int best_tail_level = 0;       // level where the tail construction began
    VMask best_tail_residual = 0;

    std::vector<VMask> path;

    LayeringSearch(const Graph& g_, double budget)
        : g(g_), dm(all_pairs_distances(g_)), comp(component_ids(g_)), deadline(budget) {
        ncomp = g.n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
        sat = saturation_level(dm);
        compat.resize(sat + 1);
        for (int lvl = 1; lvl <= sat; ++lvl) compat[lvl] = packing_compat(g, dm, lvl);
        upper = gamma_upper_bound(g, 64);
    }

    int tail_depth(VMask residual) const {
        std::vector<int> per(ncomp, 0);
        for (VMask t = residual; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            ++per[comp[v]];
        }
        int d = 0;
        for (int c : per) d = std::max(d, c);
        return d;
    }

    void record(int depth, int tail_level, VMask residual) {
        if (depth <= best) return;
        best = depth;
        best_path = path;
        best_tail_level = tail_level;
        best_tail_residual = residual;
    }

    void dfs(int level, VMask residual, int depth) {
        if (deadline.check() || best >= upper) return;
        if (residual == 0) {
            record(depth, 0, 0);
            return;
        }
        if (depth + std::popcount(residual) <= best) return;
        if (level >= std::max(sat, 1)) {
            record(depth + tail_depth(residual), level, residual);
            return;
        }
        std::vector<VMask> sets;
        bk_maximal_sets(compat[level], residual, [&](VMask s) {
            sets.push_back(s);
            return true;
        });
        std::sort(sets.begin(), sets.end(), [](VMask a, VMask b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (VMask s : sets) {
            if (depth + 1 + std::popcount(residual) - std::popcount(s) <= best) continue;
            path.push_back(s);
            dfs(level + 1, residual & ~s, depth + 1);
            path.pop_back();
            if (deadline.check() || best >= upper) return;
        }
    }

    LayeredPartition build_certificate() const {
        LayeredPartition lp;
        lp.n = g.n;
        for (VMask s : best_path) lp.layers.push_back(mask_to_vertices(s));
        if (best_tail_residual) {
            // one vertex per live component on each remaining level
            std::vector<std::vector<int>> per(ncomp);
            for (int v : mask_to_vertices(best_tail_residual)) per[comp[v]].push_back(v);
            std::size_t rounds = 0;
            for (auto& vs : per) rounds = std::max(rounds, vs.size());
            for (std::size_t r = 0; r < rounds; ++r) {
                std::vector<int> layer;
                for (auto& vs : per)
                    if (r < vs.size()) layer.push_back(vs[r]);
                std::sort(layer.begin(), layer.end());
                lp.layers.push_back(layer);
            }
        }
        return lp;
    }
};

}  // namespace detail

// Depth-first search over layered choices: pick a maximal independent set of
// the residual power graph at each level, maximizing the level count.
inline GammaResult gamma_exact_layering(const Graph& g, SearchOptions opts = {}) {
    detail::require_small("layering search", g.n, opts.max_n);
    GammaResult out;
    out.method = "layering";
    if (g.n == 0) return out;
    detail::LayeringSearch search(g, opts.budget_seconds);

    // warm start: any greedy run is a reachable leaf
    PackingColoring warm = greedy_color(g, VertexOrder::identity(g.n));
    auto warm_layers = to_layers(warm);
    search.best = warm.k;

    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    search.dfs(1, full, 0);

    out.value = search.best;
    out.exact = !search.deadline.expired;
    if (search.best_path.empty() && search.best_tail_residual == 0 &&
        search.best == warm.k) {
        out.certificate = warm_layers;  // search never improved on the warm start
    } else {
        out.certificate = search.build_certificate();
    }
    return out;
}

namespace detail {

// Greedy pass specialised for the n! oracle: distances precomputed, color
// availability in one word per vertex.
struct TinyGreedy {
    int n;
    std::vector<std::uint8_t> dist;  // 255 = unreachable
    std::vector<std::uint16_t> avail;
    std::vector<std::uint8_t> color;

    explicit TinyGreedy(const Graph& g, const DistanceMatrix& dm) : n(g.n) {
        dist.assign(static_cast<std::size_t>(n) * n, 255);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (dm.at(u, v) != kUnreachable)
                    dist[u * n + v] = static_cast<std::uint8_t>(dm.at(u, v));
        avail.assign(n, 0);
        color.assign(n, 0);
    }

    int run(const int* order) {
        std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
        std::fill(avail.begin(), avail.end(), all);
        std::fill(color.begin(), color.end(), 0);
        int used = 0;
        for (int idx = 0; idx < n; ++idx) {
            int v = order[idx];
            int c = std::countr_zero(static_cast<unsigned>(avail[v])) + 1;
            color[v] = static_cast<std::uint8_t>(c);
            used = std::max(used, c);
            const std::uint8_t* dv = dist.data() + static_cast<std::size_t>(v) * n;
            std::uint16_t bit = static_cast<std::uint16_t>(1u << (c - 1));
            for (int u = 0; u < n; ++u)
                if (color[u] == 0 && dv[u] <= c) avail[u] &= ~bit;
        }
        return used;
    }
};

}  // namespace detail

// Maximum color count over every processing order; the reference answer the
// other solvers are checked against. Factorial in n.
inline GammaResult gamma_oracle_orderings(const Graph& g, int limit = 8,
                                          int threads = 1) {
    if (limit > 12) limit = 12;
    detail::require_small("ordering oracle", g.n, limit);
    GammaResult out;
    out.method = "orderings";
    if (g.n == 0) return out;
    auto dm = all_pairs_distances(g);
    int n = g.n;

    struct BlockBest {
        int value = 0;
        std::vector<std::uint8_t> colors;
    };
    std::vector<BlockBest> blocks(n);
    if (threads < 1) threads = 1;
    parallel_chunks(0, n, std::min(threads, n), [&](int, std::uint64_t lo, std::uint64_t hi) {
        detail::TinyGreedy greedy(g, dm);
        std::vector<int> order(n);
        for (std::uint64_t first = lo; first < hi; ++first) {
            BlockBest& bb = blocks[first];
            order[0] = static_cast<int>(first);
            int at = 1;
            for (int v = 0; v < n; ++v)
                if (v != static_cast<int>(first)) order[at++] = v;
            do {
                int used = greedy.run(order.data());
                if (used > bb.value) {
                    bb.value = used;
                    bb.colors = greedy.color;
                }
            } while (std::next_permutation(order.begin() + 1, order.end()));
        }
    });

    BlockBest best;
    for (auto& bb : blocks)
        if (bb.value > best.value) best = bb;
    out.value = best.value;
    PackingColoring pc;
    pc.colors.assign(best.colors.begin(), best.colors.end());
    pc.k = best.value;
    out.certificate = to_layers(pc);
    return out;
}

// Gamma as the best dense-maximization value over all n-element independent
// sets of G(n), i.e. over every valid level assignment with k = n.
inline GammaResult gamma_via_theorem3(const Graph& g, int limit = 7) {
    detail::require_small("level-assignment search", g.n,
                          std::min(limit, kDmpRunTreeLimit));
    GammaResult out;
    out.method = "theorem3";
    if (g.n == 0) return out;
    auto dm = all_pairs_distances(g);
    int n = g.n;
    DmpMemo memo;
    LevelAssignment a{std::vector<int>(n, 0), n};
    int best = 0;
    LevelAssignment best_initial{std::vector<int>(n, 0), n};

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            int val = dmp_value(dm, a, &memo);
            if (val > best) {
                best = val;
                best_initial = a;
            }
            return;
        }
        for (int lvl = 1; lvl <= n; ++lvl) {
            bool okLevel = true;
            for (int u = 0; u < v && okLevel; ++u)
                if (a.level[u] == lvl && dm.at(u, v) <= lvl) okLevel = false;
            if (!okLevel) continue;
            a.level[v] = lvl;
            self(self, v + 1);
            a.level[v] = 0;
        }
    };
    rec(rec, 0);

    out.value = best;
    LevelAssignment terminal = dmp_best_terminal(dm, best_initial, memo);
    LayeredPartition lp;
    lp.n = n;
    lp.layers.assign(best, {});
    for (int v = 0; v < n; ++v) lp.layers[terminal.level[v] - 1].push_back(v);
    out.certificate = lp;
    return out;
}

namespace detail {

// Assemble the standard small-diameter certificate: `first` is color 1,
// `second` (optional) color 2, every other vertex its own color upward in
// vertex-id order.
inline LayeredPartition stacked_certificate(int n, VMask first, VMask second) {
    LayeredPartition lp;
    lp.n = n;
    lp.layers.push_back(mask_to_vertices(first));
    if (second) lp.layers.push_back(mask_to_vertices(second));
    for (int v = 0; v < n; ++v)
        if (!((first | second) & vbit(v))) lp.layers.push_back({v});
    return lp;
}

inline void require_diam(const Graph& g, const DistanceMatrix& dm, int want) {
    auto m = metrics(g, dm);
    if (!m.connected || m.diam != want)
        throw WrongDiameterError("operation requires a connected graph of diameter " +
                                 std::to_string(want));
}

}  // namespace detail

// diam = 2: Gamma = n - i(G) + 1, witnessed by an i(G)-set as color 1.
inline GammaResult gamma_diam2(const Graph& g, int limit = kExhaustiveLimit) {
    auto dm = all_pairs_distances(g);
    detail::require_diam(g, dm, 2);
    auto nums = independence_numbers(g, limit);
    GammaResult out;
    out.method = "diam2";
    out.value = g.n - nums.i + 1;
    out.certificate = detail::stacked_certificate(g.n, nums.i_witness, 0);
    return out;
}

// diam = 2: chi = n - alpha(G) + 1, witnessed by an alpha-set as color 1.
inline ChiResult chi_diam2(const Graph& g, int limit = kExhaustiveLimit) {
    auto dm = all_pairs_distances(g);
    detail::require_diam(g, dm, 2);
    auto nums = independence_numbers(g, limit);
    ChiResult out;
    out.method = "diam2";
    out.value = g.n - nums.alpha + 1;
    out.certificate = from_layers(detail::stacked_certificate(g.n, nums.alpha_witness, 0));
    return out;
}

struct MValue {
    int m = 0;
    VMask a_set = 0;   // maximal independent set
    VMask clique = 0;  // maximal clique of D(G) - A
};

namespace detail {

template <class Pick>
MValue m_search(const Graph& g, const DistanceMatrix& dm, int limit, bool minimize,
                Pick&& pick_clique) {
    require_small("diameter-3 optimization", g.n, limit);
    Graph dg = diametrical_graph(g, dm);
    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    std::vector<VMask> a_sets = maximal_independent_sets(g, limit);
    std::sort(a_sets.begin(), a_sets.end());
    MValue best;
    bool have = false;
    for (VMask a : a_sets) {
        VMask rest = full & ~a;
        if (rest == 0) continue;
        std::vector<VMask> cliques;
        bk_maximal_sets(dg.adj_bits, rest, [&](VMask q) {
            cliques.push_back(q);
            return true;
        });
        std::sort(cliques.begin(), cliques.end(), [](VMask x, VMask y) {
            int px = std::popcount(x), py = std::popcount(y);
            return px != py ? px < py : x < y;
        });
        VMask q = pick_clique(cliques);
        int val = std::popcount(a) + std::popcount(q);
        bool better = !have || (minimize ? val < best.m : val > best.m);
        if (better) {
            best = MValue{val, a, q};
            have = true;
        }
    }
    return best;
}

}  // namespace detail

// min over maximal independent sets A of |A| + |Q|, Q a minimum-cardinality
// maximal clique of D(G) - A.
inline MValue m_value(const Graph& g, int limit = kExhaustiveLimit) {
    auto dm = all_pairs_distances(g);
    detail::require_diam(g, dm, 3);
    return detail::m_search(g, dm, limit, true,
                            [](const std::vector<VMask>& cs) { return cs.front(); });
}

// diam = 3: Gamma = n - m(G) + 2.
inline GammaResult gamma_diam3(const Graph& g, int limit = kExhaustiveLimit) {
    MValue mv = m_value(g, limit);
    GammaResult out;
    out.method = "diam3";
    out.value = g.n - mv.m + 2;
    out.certificate = detail::stacked_certificate(g.n, mv.a_set, mv.clique);
    return out;
}

// max over maximal independent sets A of |A| + omega(D(G) - A).
inline MValue m_prime_value(const Graph& g, int limit = kExhaustiveLimit) {
    auto dm = all_pairs_distances(g);
    detail::require_diam(g, dm, 3);
    return detail::m_search(g, dm, limit, false, [](const std::vector<VMask>& cs) {
        return cs.back();  // sorted by size: back has maximum cardinality
    });
}

// diam = 3: chi = n - m'(G) + 2.
inline ChiResult chi_diam3(const Graph& g, int limit = kExhaustiveLimit) {
    MValue mv = m_prime_value(g, limit);
    ChiResult out;
    out.method = "diam3";
    out.value = g.n - mv.m + 2;
    out.certificate = from_layers(detail::stacked_certificate(g.n, mv.a_set, mv.clique));
    return out;
}

// diam = 3 shortcut: an i(G)-set leaving an isolated vertex in D(G) - A
// pins Gamma to n - i(G) + 1.
inline std::optional<GammaResult> singleton_shortcut(const Graph& g,
                                                     int limit = kExhaustiveLimit) {
    auto dm = all_pairs_distances(g);
    detail::require_diam(g, dm, 3);
    Graph dg = diametrical_graph(g, dm);
    auto nums = independence_numbers(g, limit);
    std::vector<VMask> isets;
    for_each_maximal_independent_set(
        g,
        [&](VMask s) {
            if (std::popcount(s) == nums.i) isets.push_back(s);
            return true;
        },
        limit);
    std::sort(isets.begin(), isets.end());
    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    for (VMask a : isets) {
        VMask rest = full & ~a;
        for (VMask t = rest; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            if ((dg.adj_bits[v] & rest) == 0) {
                GammaResult out;
                out.method = "singleton";
                out.value = g.n - nums.i + 1;
                out.certificate = detail::stacked_certificate(g.n, a, vbit(v));
                return out;
            }
        }
    }
    return std::nullopt;
}

// Smallest k admitting a packing k-coloring, by feasibility search over
// level assignments with increasing k. A first-fit run seeds the upper
// bound; the clique number is a lower bound (clique vertices need distinct
// colors).
inline ChiResult chi_exact(const Graph& g, SearchOptions opts = {.max_n = 12}) {
    detail::require_small("exact chi search", g.n, opts.max_n);
    ChiResult out;
    out.method = "exact";
    if (g.n == 0) return out;
    auto dm = all_pairs_distances(g);
    PackingColoring warm = greedy_color(g, VertexOrder::identity(g.n));
    int ub = warm.k;

    int omega = 1;
    detail::bk_maximal_sets(g.adj_bits, g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1),
                            [&](VMask q) {
                                omega = std::max(omega, std::popcount(q));
                                return true;
                            });

    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    detail::Deadline deadline(opts.budget_seconds);
    std::vector<int> colors(g.n, 0);
    auto feasible = [&](auto&& self, int idx, int k) -> bool {
        if (deadline.check()) return false;
        if (idx == g.n) return true;
        int v = order[idx];
        for (int c = 1; c <= k; ++c) {
            bool okc = true;
            for (int j = 0; j < idx && okc; ++j) {
                int u = order[j];
                if (colors[u] == c && dm.at(u, v) <= c) okc = false;
            }
            if (!okc) continue;
            colors[v] = c;
            if (self(self, idx + 1, k)) return true;
            colors[v] = 0;
        }
        return false;
    };

    for (int k = omega; k < ub; ++k) {
        std::fill(colors.begin(), colors.end(), 0);
        if (feasible(feasible, 0, k)) {
            // smaller values of k were refuted before the deadline could
            // expire, so a witness at k settles chi exactly
            PackingColoring pc;
            pc.colors = colors;
            pc.k = k;
            out.value = k;
            out.certificate = pc;
            return out;
        }
        if (deadline.expired) {
            out.value = ub;  // upper bound only
            out.certificate = warm;
            out.exact = false;
            return out;
        }
    }
    out.value = ub;
    out.certificate = warm;
    return out;
}

// Route to the cheapest applicable exact method.
inline GammaResult gamma_auto(const Graph& g, SearchOptions opts = {}) {
    auto dm = all_pairs_distances(g);
    auto m = metrics(g, dm);
    if (m.connected && g.n <= 64) {
        if (m.diam <= 1) {
            GammaResult out;
            out.method = "universal";
            out.value = g.n;
            out.certificate = detail::stacked_certificate(g.n, g.n ? vbit(0) : 0, 0);
            return out;
        }
        if (m.diam == 2 && g.n <= kExhaustiveLimit) return gamma_diam2(g);
        if (m.diam == 3 && g.n <= kExhaustiveLimit) {
            if (auto r = singleton_shortcut(g)) return *r;
            return gamma_diam3(g);
        }
    }
    return gamma_exact_layering(g, opts);
}

inline ChiResult chi_auto(const Graph& g, SearchOptions opts = {.max_n = 12}) {
    auto dm = all_pairs_distances(g);
    auto m = metrics(g, dm);
    if (m.connected && g.n <= kExhaustiveLimit) {
        if (m.diam == 2) return chi_diam2(g);
        if (m.diam == 3 && g.n > opts.max_n) return chi_diam3(g);
    }
    return chi_exact(g, opts);
}

}  // namespace packrho
