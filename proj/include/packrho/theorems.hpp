#pragma once

#include <cstdint>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "packrho/coloring.hpp"
#include "packrho/exact.hpp"
#include "packrho/families.hpp"
#include "packrho/graph_io.hpp"
#include "packrho/independence.hpp"
#include "packrho/parallel.hpp"
#include "packrho/rng.hpp"

namespace packrho {

struct TheoremReport {
    std::string theorem;
    std::uint64_t instances = 0;
    bool passed = true;
    std::string counterexample;  // graph6 of the first failure, re-checkable
    std::string note;
};

// ---- labeled graph enumeration ------------------------------------------
// Graphs on n vertices are edge masks over the pairs
// (0,1),(0,2),(1,2),(0,3),... — the same order the graph6 bits walk.

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

struct SweepOutcome {
    std::uint64_t connected = 0;
    bool passed = true;
    bool has_counterexample = false;
    std::uint64_t counterexample_mask = 0;
};

// Run pred over every labeled connected graph on n vertices. pred must be
// safe to call from several threads; the reported counterexample is the one
// of smallest mask regardless of thread count.
template <class Pred>
SweepOutcome sweep_connected_graphs(int n, int threads, Pred&& pred) {
    std::uint64_t total = labeled_graph_count(n);
    std::vector<SweepOutcome> parts(std::max(1, std::min<int>(threads, 1 << 10)));
    parallel_chunks(0, total, static_cast<int>(parts.size()),
                    [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
                        SweepOutcome& local = parts[chunk];
                        for (std::uint64_t mask = lo; mask < hi; ++mask) {
                            Graph g = graph_from_mask(n, mask);
                            if (!is_connected(g)) continue;
                            ++local.connected;
                            if (!pred(g)) {
                                local.passed = false;
                                if (!local.has_counterexample) {
                                    local.has_counterexample = true;
                                    local.counterexample_mask = mask;
                                }
                            }
                        }
                    });
    SweepOutcome merged;
    for (const auto& p : parts) {
        merged.connected += p.connected;
        if (!p.passed && !merged.has_counterexample) {
            merged.passed = false;
            merged.has_counterexample = true;
            merged.counterexample_mask = p.counterexample_mask;
        }
        merged.passed = merged.passed && p.passed;
    }
    return merged;
}

namespace detail {

inline void fold_outcome(TheoremReport& rep, int n, const SweepOutcome& oc) {
    rep.instances += oc.connected;
    if (!oc.passed && rep.counterexample.empty()) {
        rep.passed = false;
        rep.counterexample = to_graph6(graph_from_mask(n, oc.counterexample_mask));
    }
}

}  // namespace detail

// Gamma reaches n exactly on the graphs with a universal vertex.
inline TheoremReport check_prop_universal(int n_max, int threads = 1) {
    TheoremReport rep;
    rep.theorem = "universal";
    if (n_max > 7) throw SizeLimitError("universal-vertex sweep", n_max, 7);
    for (int n = 1; n <= n_max; ++n) {
        auto oc = sweep_connected_graphs(n, threads, [&](const Graph& g) {
            bool gamma_n = gamma_oracle_orderings(g, 7).value == g.n;
            return gamma_n == has_universal_vertex(g);
        });
        detail::fold_outcome(rep, n, oc);
    }
    rep.note = "gamma = n iff universal vertex, all labeled connected graphs";
    return rep;
}

// The four Gamma = n-1 conditions for a connected graph.
inline bool n_minus_1_conditions(const Graph& g, const DistanceMatrix& dm) {
    auto nums = independence_numbers(g, 64);
    if (nums.i != 2) return false;  // (i)
    auto m = metrics(g, dm);
    if (m.diam > 4) return false;  // (ii)
    std::vector<VMask> isets;
    for_each_maximal_independent_set(
        g,
        [&](VMask s) {
            if (std::popcount(s) == 2) isets.push_back(s);
            return true;
        },
        64);
    if (m.rad == 3) {  // (iii)
        bool ok = false;
        for (VMask s : isets) {
            auto xy = mask_to_vertices(s);
            for (int swap = 0; swap < 2 && !ok; ++swap) {
                int x = xy[swap], y = xy[1 - swap];
                if (dm.at(x, y) != 3) continue;
                for (int w : g.adj[x]) {
                    bool covers = true;
                    for (int z : g.adj[y])
                        if (dm.at(w, z) > 2) {
                            covers = false;
                            break;
                        }
                    if (covers) {
                        ok = true;
                        break;
                    }
                }
            }
        }
        if (!ok) return false;
    }
    if (m.rad == 2 && m.diam == 4) {  // (iv)
        VMask central = 0, diametrical = 0;
        for (int v = 0; v < g.n; ++v) {
            if (m.ecc[v] == m.rad) central |= vbit(v);
            if (m.ecc[v] == m.diam) diametrical |= vbit(v);
        }
        bool ok = false;
        VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
        for (VMask s : isets) {
            VMask w_choices = central & ~s;
            VMask z_choices = full & ~diametrical & ~s;
            // need two distinct vertices: w central, z non-diametrical
            for (VMask t = w_choices; t && !ok; t &= t - 1)
                if (z_choices & ~vbit(std::countr_zero(t))) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

// Conditions (i)-(iv) characterize Gamma = n-1 among connected graphs;
// independent-domination-number-2 graphs have radius 2 or 3 and diameter
// between 2 and 5.
inline TheoremReport check_thm_n_minus_1(int n_max, int threads = 1) {
    TheoremReport rep;
    rep.theorem = "n-minus-1";
    if (n_max > 7) throw SizeLimitError("gamma = n-1 sweep", n_max, 7);
    for (int n = 1; n <= n_max; ++n) {
        auto oc = sweep_connected_graphs(n, threads, [&](const Graph& g) {
            auto dm = all_pairs_distances(g);
            bool gamma_n1 = gamma_oracle_orderings(g, 7).value == g.n - 1;
            if (gamma_n1 != n_minus_1_conditions(g, dm)) return false;
            auto nums = independence_numbers(g, 64);
            if (nums.i == 2) {
                auto m = metrics(g, dm);
                if (!(m.rad == 2 || m.rad == 3)) return false;
                if (!(m.diam >= 2 && m.diam <= 5)) return false;
            }
            return true;
        });
        detail::fold_outcome(rep, n, oc);
    }
    rep.note = "conditions (i)-(iv) iff gamma = n-1, plus rad/diam bounds when i = 2";
    return rep;
}

// Closed forms for diameter 2 and 3 against the exhaustive solvers.
inline std::vector<TheoremReport> check_diam_formulas(int n_max, int threads = 1) {
    if (n_max > 7) throw SizeLimitError("diameter-formula sweep", n_max, 7);
    TheoremReport gamma2{"diam2-gamma"}, chi2{"diam2-chi"};
    TheoremReport gamma3{"diam3-gamma"}, chi3{"diam3-chi"};
    for (int n = 2; n <= n_max; ++n) {
        auto oc2g = sweep_connected_graphs(n, threads, [&](const Graph& g) {
            if (metrics(g).diam != 2) return true;
            return gamma_diam2(g).value == gamma_oracle_orderings(g, 7).value;
        });
        detail::fold_outcome(gamma2, n, oc2g);
        auto oc2c = sweep_connected_graphs(n, threads, [&](const Graph& g) {
            if (metrics(g).diam != 2) return true;
            return chi_diam2(g).value == chi_exact(g).value;
        });
        detail::fold_outcome(chi2, n, oc2c);
        auto oc3g = sweep_connected_graphs(n, threads, [&](const Graph& g) {
            if (metrics(g).diam != 3) return true;
            return gamma_diam3(g).value == gamma_oracle_orderings(g, 7).value;
        });
        detail::fold_outcome(gamma3, n, oc3g);
        auto oc3c = sweep_connected_graphs(n, threads, [&](const Graph& g) {
            if (metrics(g).diam != 3) return true;
            return chi_diam3(g).value == chi_exact(g).value;
        });
        detail::fold_outcome(chi3, n, oc3c);
    }
    gamma2.note = "gamma = n - i + 1 on every labeled connected diameter-2 graph";
    chi2.note = "chi = n - alpha + 1 on every labeled connected diameter-2 graph";
    gamma3.note = "gamma = n - m + 2 on every labeled connected diameter-3 graph";
    chi3.note = "chi = n - m' + 2 on every labeled connected diameter-3 graph";
    return {gamma2, chi2, gamma3, chi3};
}

// Join formula: Gamma(G v H) = |G| + |H| - min(i(G), i(H)) + 1, plus the
// named special cases.
inline TheoremReport check_joins(int max_side = 5, int oracle_limit = 8) {
    TheoremReport rep;
    rep.theorem = "joins";
    auto check_one = [&](const Graph& a, const Graph& b, const std::string& label) {
        Graph j = join_graphs(a, b);
        int expect = a.n + b.n -
                     std::min(independence_numbers(a).i, independence_numbers(b).i) + 1;
        int got;
        auto m = metrics(j);
        if (m.diam == 1) {
            got = j.n;  // join of two complete graphs
        } else {
            got = gamma_diam2(j).value;
        }
        ++rep.instances;
        bool ok = got == expect;
        if (ok && j.n <= oracle_limit)
            ok = gamma_oracle_orderings(j, oracle_limit).value == expect;
        if (!ok && rep.counterexample.empty()) {
            rep.passed = false;
            rep.counterexample = to_graph6(j);
            rep.note = "first failure: " + label;
        }
        return ok;
    };
    for (int s = 1; s <= max_side; ++s)
        for (int t = s; t <= max_side; ++t) {
            // complete bipartite = empty v empty
            Graph es = Graph::from_edges(s, {}), et = Graph::from_edges(t, {});
            check_one(es, et, "K_{" + std::to_string(s) + "," + std::to_string(t) + "}");
        }
    for (int p = 1; p <= max_side; ++p) {
        check_one(path_graph(p), path_graph(1), "P_p v K_1");
        check_one(complete_graph(p), Graph::from_edges(3, {}), "K_s v empty");
    }
    for (int p = 4; p <= max_side + 3; ++p)
        for (int r = p; r <= max_side + 3; ++r) {
            // ceil(p/3) formula bullets ride on i(P_p) = i(C_p) = ceil(p/3)
            int ip = (p + 2) / 3, ir = (r + 2) / 3;
            if (independence_numbers(path_graph(p)).i != ip ||
                independence_numbers(cycle_graph(r)).i != ir) {
                rep.passed = false;
                rep.note = "independent domination number of a path/cycle is off";
                return rep;
            }
            check_one(path_graph(p), path_graph(r), "P v P");
            check_one(path_graph(p), cycle_graph(r), "P v C");
            check_one(cycle_graph(p), cycle_graph(r), "C v C");
        }
    if (rep.note.empty()) rep.note = "join formula vs diameter-2 closed form and oracle";
    return rep;
}

struct PathCheckOptions {
    int k_exact_max = 10;     // ordering-oracle range
    int k_seq = 40;           // witness embeds into P_{k_seq}
    long long trials = 10000; // random orders
    int k_random = 40;
    std::uint64_t seed = 1;
    int threads = 1;
};

inline const std::vector<int>& path7_witness() {
    static const std::vector<int> w = {2, 1, 3, 4, 1, 2, 5, 1, 3, 2, 1, 7, 1, 4, 2,
                                       1, 3, 6, 1, 2, 3, 1, 5, 2, 1, 4, 3, 1, 2};
    return w;
}

// Paths top out at seven colors: the 29-vertex witness realizes 7, small
// paths never exceed it, and random-order trials try to push past it.
inline TheoremReport check_paths(PathCheckOptions opts = {}) {
    TheoremReport rep;
    rep.theorem = "paths";
    const auto& w = path7_witness();

    // (a) witness is a valid greedy packing 7-coloring of P_29
    Graph p29 = path_graph(29);
    PackingColoring wc{w, 7};
    if (!verify_greedy_packing_coloring(p29, wc).ok()) {
        rep.passed = false;
        rep.counterexample = to_graph6(p29);
        rep.note = "witness rejected on P_29";
        return rep;
    }
    ++rep.instances;

    // embed the witness into a longer path: color classes first, rest after
    if (opts.k_seq >= 29) {
        Graph pk = path_graph(opts.k_seq);
        std::vector<int> order;
        for (int c = 1; c <= 7; ++c)
            for (int v = 0; v < 29; ++v)
                if (w[v] == c) order.push_back(v);
        for (int v = 29; v < opts.k_seq; ++v) order.push_back(v);
        auto col = greedy_color(pk, VertexOrder::of(order, opts.k_seq));
        bool prefix_ok = std::equal(w.begin(), w.end(), col.colors.begin());
        if (!prefix_ok || col.k < 7) {
            rep.passed = false;
            rep.counterexample = to_graph6(pk);
            rep.note = "witness embedding failed on P_" + std::to_string(opts.k_seq);
            return rep;
        }
        ++rep.instances;
    }

    // (b) exact values for short paths stay at or below 7
    std::ostringstream vals;
    for (int k = 1; k <= opts.k_exact_max; ++k) {
        int gamma = gamma_oracle_orderings(path_graph(k), 12, opts.threads).value;
        vals << (k > 1 ? "," : "") << gamma;
        ++rep.instances;
        if (gamma > 7) {
            rep.passed = false;
            rep.counterexample = to_graph6(path_graph(k));
            rep.note = "gamma(P_" + std::to_string(k) + ") exceeds 7";
            return rep;
        }
    }

    // (c) randomized falsification on long paths
    int worst = 0;
    for (int k : {opts.k_random, 60}) {
        long long t = k == opts.k_random ? opts.trials : std::min<long long>(opts.trials, 2000);
        Graph pk = path_graph(k);
        int chunks = std::max(1, opts.threads);
        std::vector<int> worst_per(chunks, 0);
        parallel_chunks(0, static_cast<std::uint64_t>(t), chunks,
                        [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
                            for (std::uint64_t it = lo; it < hi; ++it) {
                                SplitMix64 rng = stream_for(
                                    opts.seed, it ^ (static_cast<std::uint64_t>(k) << 32));
                                auto perm = random_permutation(k, rng);
                                auto col = greedy_color(pk, VertexOrder::of(perm, k));
                                worst_per[chunk] = std::max(worst_per[chunk], col.k);
                            }
                        });
        for (int wp : worst_per) worst = std::max(worst, wp);
        rep.instances += t;
        if (worst > 7) {
            rep.passed = false;
            rep.counterexample = to_graph6(pk);
            rep.note = "a random order used more than 7 colors on P_" + std::to_string(k);
            return rep;
        }
    }
    rep.note = "gamma(P_k) for k=1.." + std::to_string(opts.k_exact_max) + ": " +
               vals.str() + "; random-order max " + std::to_string(worst);
    return rep;
}

// Arbitrarily large Gamma - chi gaps: stars give gap k at k+2 vertices.
struct GapFamily {
    Graph graph;
    int gamma = 0;
    int chi = 0;
    int gap = 0;
};

inline GapFamily gap_family(int k) {
    if (k < 1) throw BadParametersError("gap must be >= 1");
    GapFamily out;
    out.graph = star_graph(k + 2);
    out.gamma = k + 2;  // universal center
    out.chi = 2;
    out.gap = k;
    return out;
}

}  // namespace packrho
