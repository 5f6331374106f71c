#pragma once

#include <optional>
#include <vector>

#include "cis/graph.hpp"

namespace cis {

/// Per-order connected-induced-subgraph counts N_1..N_n plus the total N(G).
struct CountProfile {
    int order = 0;
    std::vector<BigCount> per_order;  // per_order[k-1] holds N_k
    BigCount total;

    const BigCount& nk(int k) const {
        if (k < 1 || k > order) throw std::invalid_argument("subgraph order out of range");
        return per_order[static_cast<std::size_t>(k - 1)];
    }
};

/// Which connected induced subgraphs to visit: all of them, those containing
/// one anchor vertex, or those containing two; optionally restricted to one
/// subgraph order.
struct AnchorQuery {
    enum class Mode { any, containing, containing_pair };

    Mode mode = Mode::any;
    int u = -1;
    int v = -1;
    std::optional<int> order_filter;

    static AnchorQuery any() { return {}; }
    static AnchorQuery at(int u) { return {Mode::containing, u, -1, std::nullopt}; }
    static AnchorQuery pair(int u, int v) { return {Mode::containing_pair, u, v, std::nullopt}; }

    AnchorQuery with_order(int k) const {
        AnchorQuery q = *this;
        q.order_filter = k;
        return q;
    }

    void validate(const Graph& g) const {
        if (mode != Mode::any) {
            if (u < 0 || u >= g.order()) throw std::invalid_argument("anchor vertex out of range");
            if (mode == Mode::containing_pair) {
                if (v < 0 || v >= g.order())
                    throw std::invalid_argument("anchor vertex out of range");
                if (u == v) throw std::invalid_argument("anchor vertices must be distinct");
            }
        }
        if (order_filter && *order_filter < 1)
            throw std::invalid_argument("order filter must be >= 1");
    }
};

namespace detail {

// Connected-set enumeration by extension with an exclusion set: every
// connected superset of s avoiding `banned` either is s itself or contains
// some frontier vertex; branching on the smallest such vertex first, and
// banning it for the remaining branches, visits each set exactly once.
template <class Yield>
void grow_connected(const Graph& g, std::uint64_t s, std::uint64_t banned, int size,
                    int max_size, Yield& yield) {
    yield(s, size);
    if (size == max_size) return;
    std::uint64_t frontier = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1)
        frontier |= g.adj_word(std::countr_zero(rest));
    frontier &= ~(s | banned);
    while (frontier) {
        std::uint64_t u = frontier & (0 - frontier);
        frontier ^= u;
        grow_connected(g, s | u, banned, size + 1, max_size, yield);
        banned |= u;
    }
}

}  // namespace detail

/// Streams every vertex set that induces a connected subgraph and satisfies
/// the query, each exactly once. Order is deterministic: anchors increase,
/// and each branch adds the smallest admissible frontier vertex first
/// (depth-first).
template <class F>
void enumerate_cis(const Graph& g, const AnchorQuery& q, F&& f) {
    q.validate(g);
    int kcap = q.order_filter.value_or(0);  // 0: no cap (sizes start at 1)
    auto yield = [&](std::uint64_t s, int size) {
        if (kcap && size != kcap) return;
        if (q.mode == AnchorQuery::Mode::containing_pair && !(s >> q.v & 1)) return;
        f(VertexSet(s));
    };
    if (q.mode == AnchorQuery::Mode::any) {
        for (int a = 0; a < g.order(); ++a)
            detail::grow_connected(g, std::uint64_t{1} << a,
                                   (std::uint64_t{1} << a) - 1, 1, kcap, yield);
    } else {
        detail::grow_connected(g, std::uint64_t{1} << q.u, 0, 1, kcap, yield);
    }
}

inline std::vector<VertexSet> enumerate_cis(const Graph& g, const AnchorQuery& q) {
    std::vector<VertexSet> out;
    enumerate_cis(g, q, [&](VertexSet s) { out.push_back(s); });
    return out;
}

/// Exact N_k for every k and the total N(G). Disconnected inputs are fine:
/// the profile is the component-wise sum.
inline CountProfile count_profile(const Graph& g) {
    // Per-order tallies are bounded by C(64, k) < 2^63, so plain words cannot
    // overflow before the enumeration itself becomes intractable.
    std::array<std::uint64_t, kMaxOrder> tally{};
    enumerate_cis(g, AnchorQuery::any(),
                  [&](VertexSet s) { ++tally[static_cast<std::size_t>(s.count() - 1)]; });
    CountProfile p;
    p.order = g.order();
    p.per_order.reserve(static_cast<std::size_t>(g.order()));
    for (int k = 1; k <= g.order(); ++k) {
        p.per_order.emplace_back(tally[static_cast<std::size_t>(k - 1)]);
        p.total += p.per_order.back();
    }
    return p;
}

/// N(G)_u: connected induced subgraphs containing u.
inline BigCount count_containing(const Graph& g, int u) {
    std::uint64_t n = 0;
    enumerate_cis(g, AnchorQuery::at(u), [&](VertexSet) { ++n; });
    return BigCount(n);
}

/// N(G)_{u,v}: connected induced subgraphs containing both u and v.
inline BigCount count_containing_pair(const Graph& g, int u, int v) {
    std::uint64_t n = 0;
    enumerate_cis(g, AnchorQuery::pair(u, v), [&](VertexSet) { ++n; });
    return BigCount(n);
}

/// Number of subtrees of the tree t that contain `root`, by the linear-time
/// product rule f(v) = prod over children (1 + f(child)). Agrees with
/// count_containing(t, root).
inline BigCount rooted_subtree_count(const Graph& t, int root) {
    if (root < 0 || root >= t.order()) throw std::invalid_argument("root out of range");
    if (!is_tree(t)) throw std::invalid_argument("rooted_subtree_count requires a tree");

    // children in DFS order; process in reverse for a post-order pass
    std::vector<int> order_stack{root};
    std::vector<int> parent(static_cast<std::size_t>(t.order()), -1);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(t.order()));
    std::uint64_t seen = std::uint64_t{1} << root;
    while (!order_stack.empty()) {
        int v = order_stack.back();
        order_stack.pop_back();
        visit.push_back(v);
        for (int w : t.neighbors(v))
            if (!(seen >> w & 1)) {
                seen |= std::uint64_t{1} << w;
                parent[static_cast<std::size_t>(w)] = v;
                order_stack.push_back(w);
            }
    }
    std::vector<BigCount> f(static_cast<std::size_t>(t.order()), BigCount(1));
    for (auto it = visit.rbegin(); it != visit.rend(); ++it) {
        int p = parent[static_cast<std::size_t>(*it)];
        if (p >= 0) f[static_cast<std::size_t>(p)] *= 1 + f[static_cast<std::size_t>(*it)];
    }
    return f[static_cast<std::size_t>(root)];
}

/// Cut vertices of a connected graph, by the standard DFS low-point rule.
/// Independent of the enumeration kernel, so the N_{n-1} identity can be
/// cross-checked between the two.
inline VertexSet articulation_points(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("articulation_points requires a connected graph");
    int n = g.order();
    VertexSet cuts;
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);

    struct Frame {
        int v;
        int parent;
        VertexSet::iterator it;
        int children = 0;
    };
    std::vector<Frame> stack;
    depth[0] = 0;
    low[0] = 0;
    stack.push_back({0, -1, g.neighbors(0).begin()});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.it != g.neighbors(f.v).end()) {
            int w = *f.it;
            ++f.it;
            if (w == f.parent) continue;
            if (depth[static_cast<std::size_t>(w)] >= 0) {
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], depth[static_cast<std::size_t>(w)]);
            } else {
                ++f.children;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(f.v)] + 1;
                low[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)];
                stack.push_back({w, f.v, g.neighbors(w).begin()});
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (done.parent >= 0) {
                auto pv = static_cast<std::size_t>(done.parent);
                low[pv] = std::min(low[pv], low[static_cast<std::size_t>(done.v)]);
                bool parent_is_root = stack.size() == 1;
                if (!parent_is_root &&
                    low[static_cast<std::size_t>(done.v)] >= depth[pv])
                    cuts.add(done.parent);
            } else if (done.children > 1) {
                cuts.add(done.v);
            }
        }
    }
    return cuts;
}

/// Number of non-cut vertices; equals N_{n-1}(G) for connected G.
inline int non_cut_vertex_count(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("non_cut_vertex_count requires order >= 2");
    return g.order() - articulation_points(g).count();
}

/// Total count via the deletion recursion N(G) = N(G)_v + N(G - v), peeling
/// vertex 0 (the lowest id of the first component) each step.
inline BigCount count_by_deletion(const Graph& g) {
    BigCount total = 0;
    Graph cur = g;
    for (;;) {
        total += count_containing(cur, 0);
        if (cur.order() == 1) break;
        cur = delete_vertex(cur, 0);
    }
    return total;
}

}  // namespace cis
