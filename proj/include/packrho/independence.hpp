#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "packrho/distance.hpp"
#include "packrho/graph.hpp"

namespace packrho {

namespace detail {

// Bron-Kerbosch with pivoting over an arbitrary symmetric "compatible"
// relation given as per-vertex masks (self bit must be clear). Reports every
// inclusion-maximal pairwise-compatible subset of `universe` exactly once.
// Visitor returns false to stop early; the walk is deterministic: candidates
// are taken in ascending vertex id, pivot is the max-cover vertex of lowest id.
template <class F>
bool bk_maximal_sets(const std::vector<VMask>& compat, VMask universe, F&& visit) {
    auto rec = [&](auto&& self, VMask r, VMask p, VMask x) -> bool {
        if (p == 0 && x == 0) return visit(r);
        VMask px = p | x;
        int pivot = -1, cover = -1;
        for (VMask t = px; t;) {
            int u = std::countr_zero(t);
            t &= t - 1;
            int c = std::popcount(p & compat[u]);
            if (c > cover) {
                cover = c;
                pivot = u;
            }
        }
        VMask cand = p & ~compat[pivot];
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            VMask bv = vbit(v);
            if (!self(self, r | bv, p & compat[v], x & compat[v])) return false;
            p &= ~bv;
            x |= bv;
        }
        return true;
    };
    return rec(rec, 0, universe, 0);
}

inline std::vector<VMask> independence_compat(const Graph& g) {
    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    std::vector<VMask> compat(g.n);
    for (int v = 0; v < g.n; ++v) compat[v] = full & ~g.adj_bits[v] & ~vbit(v);
    return compat;
}

inline void require_small(const char* what, int n, int limit) {
    if (limit > 64) limit = 64;
    if (n > limit) throw SizeLimitError(what, n, limit);
}

}  // namespace detail

// Every inclusion-maximal independent set of g, each exactly once.
// Visitor: bool(VMask), return false to stop the stream.
template <class F>
void for_each_maximal_independent_set(const Graph& g, F&& visit,
                                      int limit = kExhaustiveLimit) {
    detail::require_small("maximal independent set enumeration", g.n, limit);
    if (g.n == 0) {
        visit(VMask{0});
        return;
    }
    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    detail::bk_maximal_sets(detail::independence_compat(g), full, visit);
}

inline std::vector<VMask> maximal_independent_sets(const Graph& g,
                                                   int limit = kExhaustiveLimit) {
    std::vector<VMask> out;
    for_each_maximal_independent_set(
        g,
        [&](VMask s) {
            out.push_back(s);
            return true;
        },
        limit);
    return out;
}

inline bool is_independent_set(const Graph& g, VMask s) {
    for (VMask t = s; t;) {
        int v = std::countr_zero(t);
        t &= t - 1;
        if (g.adj_bits[v] & s) return false;
    }
    return true;
}

struct IndependenceNumbers {
    int alpha = 0;
    int i = 0;
    VMask alpha_witness = 0;
    VMask i_witness = 0;
};

inline IndependenceNumbers independence_numbers(const Graph& g,
                                                int limit = kExhaustiveLimit) {
    IndependenceNumbers out;
    out.i = g.n + 1;
    for_each_maximal_independent_set(
        g,
        [&](VMask s) {
            int c = std::popcount(s);
            if (c > out.alpha) {
                out.alpha = c;
                out.alpha_witness = s;
            }
            if (c < out.i) {
                out.i = c;
                out.i_witness = s;
            }
            return true;
        },
        limit);
    if (g.n == 0) out.i = 0;
    return out;
}

inline bool is_well_covered(const Graph& g, int limit = kExhaustiveLimit) {
    auto nums = independence_numbers(g, limit);
    return nums.alpha == nums.i;
}

// Pairwise distance > t; unreachable pairs always qualify.
inline bool is_t_packing(const DistanceMatrix& dm, VMask x, int t) {
    auto vs = mask_to_vertices(x);
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (dm.at(vs[a], vs[b]) <= t) return false;
    return true;
}

inline bool is_t_packing(const Graph& g, VMask x, int t) {
    return is_t_packing(all_pairs_distances(g), x, t);
}

// Compatibility masks of the t-th power: bit u of row v set iff d(v,u) > t.
inline std::vector<VMask> packing_compat(const Graph& g, const DistanceMatrix& dm,
                                         int t) {
    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    std::vector<VMask> compat(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        for (int u = 0; u < g.n; ++u)
            if (u != v && dm.at(v, u) > t) compat[v] |= vbit(u);
        compat[v] &= full;
    }
    return compat;
}

// rho_t: maximum cardinality of a t-packing (rho_1 equals alpha).
inline int t_packing_number(const Graph& g, int t, int limit = kExhaustiveLimit) {
    detail::require_small("t-packing number", g.n, limit);
    if (g.n == 0) return 0;
    auto dm = all_pairs_distances(g);
    auto compat = packing_compat(g, dm, t);
    VMask full = g.n == 64 ? ~VMask{0} : (vbit(g.n) - 1);
    int best = 0;
    detail::bk_maximal_sets(compat, full, [&](VMask s) {
        best = std::max(best, std::popcount(s));
        return true;
    });
    return best;
}

}  // namespace packrho
