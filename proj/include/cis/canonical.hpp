#pragma once

#include <algorithm>
#include <string>

#include "cis/graph6.hpp"

namespace cis {

/// Canonicalisation is exact search over labellings; past this order it is
/// no longer affordable.
inline constexpr int kCanonicalCap = 12;

namespace detail {

// Finds the vertex ordering whose adjacency bit string (graph6 body order)
// is lexicographically smallest. Plain depth-first placement with two exact
// prunes:
//  - branch-and-bound on the column of bits each placement appends, against
//    the best full string found so far;
//  - twin skipping: if two unplaced vertices have equal neighbourhoods
//    outside each other, swapping them is an automorphism, so only the
//    smaller id is tried.
struct MinStringSearch {
    const Graph& g;
    int n;
    std::array<std::uint64_t, kCanonicalCap> twin_below{};
    std::array<std::uint64_t, kCanonicalCap> best{};
    std::array<int, kCanonicalCap> placed{};
    std::array<int, kCanonicalCap> best_perm{};
    std::uint64_t used = 0;

    explicit MinStringSearch(const Graph& graph) : g(graph), n(graph.order()) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t mask = 0;
            for (int u = 0; u < v; ++u) {
                std::uint64_t bu = std::uint64_t{1} << u;
                std::uint64_t bv = std::uint64_t{1} << v;
                if ((g.adj_word(u) & ~bv) == (g.adj_word(v) & ~bu)) mask |= bu;
            }
            twin_below[static_cast<std::size_t>(v)] = mask;
        }
        best.fill(~std::uint64_t{0});
        dfs(0);
    }

    void dfs(int depth) {
        if (depth == n) {
            std::copy(placed.begin(), placed.begin() + n, best_perm.begin());
            return;
        }
        struct Cand {
            std::uint64_t column;
            int v;
        };
        std::array<Cand, kCanonicalCap> cand;
        int m = 0;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (twin_below[static_cast<std::size_t>(v)] & ~used) continue;
            std::uint64_t column = 0;
            for (int i = 0; i < depth; ++i)
                column = column << 1 |
                         (g.adj_word(placed[static_cast<std::size_t>(i)]) >> v & 1);
            cand[static_cast<std::size_t>(m++)] = {column, v};
        }
        std::sort(cand.begin(), cand.begin() + m, [](const Cand& a, const Cand& b) {
            return a.column != b.column ? a.column < b.column : a.v < b.v;
        });
        auto d = static_cast<std::size_t>(depth);
        for (int i = 0; i < m; ++i) {
            const Cand& c = cand[static_cast<std::size_t>(i)];
            if (c.column > best[d]) break;
            if (c.column < best[d]) {
                best[d] = c.column;
                for (int j = depth + 1; j < n; ++j) best[static_cast<std::size_t>(j)] = ~std::uint64_t{0};
            }
            placed[d] = c.v;
            used |= std::uint64_t{1} << c.v;
            dfs(depth + 1);
            used &= ~(std::uint64_t{1} << c.v);
        }
    }
};

inline void check_canonical_cap(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw std::invalid_argument("canonical form supported only up to order 12");
}

}  // namespace detail

/// Position -> vertex map realising the canonical (minimum graph6) labelling.
inline std::vector<int> canonical_permutation(const Graph& g) {
    detail::check_canonical_cap(g);
    detail::MinStringSearch search(g);
    return std::vector<int>(search.best_perm.begin(), search.best_perm.begin() + g.order());
}

/// graph6 string of the canonical representative: equal iff isomorphic.
inline std::string canonical_form(const Graph& g) {
    return emit_graph6(relabel(g, canonical_permutation(g)));
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace cis
