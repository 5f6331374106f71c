#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cis/vertex_set.hpp"

namespace cis {

/// Simple undirected graph on 1..64 vertices, one adjacency word per vertex.
/// Invariants: adjacency is symmetric, irreflexive, and confined to ids < order.
/// Graphs are treated as immutable once built; edits happen only while
/// constructing, and every operation below returns a fresh graph.
class Graph {
public:
    explicit Graph(int order) : order_(order) {
        if (order < 1 || order > kMaxOrder)
            throw std::invalid_argument("graph order must be in 1..64");
        adj_.assign(static_cast<std::size_t>(order), 0);
    }

    int order() const { return order_; }
    VertexSet vertices() const { return VertexSet::first_n(order_); }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    /// Unchecked adjacency word; the enumeration hot path.
    std::uint64_t adj_word(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return neighbors(v).count(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)] >> v & 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (std::uint64_t w : adj_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_) throw std::invalid_argument("vertex id out of range");
    }

    int order_;
    std::vector<std::uint64_t> adj_;
};

/// True iff the nonempty set s induces a connected subgraph of g.
inline bool induces_connected(const Graph& g, VertexSet s) {
    if (s.empty()) return false;
    std::uint64_t target = s.bits();
    std::uint64_t reached = std::uint64_t{1} << s.lowest();
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = frontier; rest; rest &= rest - 1)
            next |= g.adj_word(std::countr_zero(rest));
        next &= target & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == target;
}

inline bool is_connected(const Graph& g) { return induces_connected(g, g.vertices()); }

/// Components ordered by their smallest vertex id (so the component of
/// vertex 0 comes first). They partition the vertex set.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::uint64_t unseen = g.vertices().bits();
    while (unseen) {
        std::uint64_t start = unseen & (0 - unseen);
        std::uint64_t reached = start;
        std::uint64_t frontier = start;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest; rest &= rest - 1)
                next |= g.adj_word(std::countr_zero(rest));
            next &= ~reached;
            reached |= next;
            frontier = next;
        }
        comps.emplace_back(reached);
        unseen &= ~reached;
    }
    return comps;
}

/// Subgraph induced by the nonempty set s, with retained vertices relabelled
/// 0..|s|-1 in increasing order of their old ids.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph of the empty set");
    if (!s.is_subset_of(g.vertices()))
        throw std::invalid_argument("vertex set exceeds graph order");
    Graph h(s.count());
    std::array<int, kMaxOrder> rank{};
    int next = 0;
    for (int v : s) rank[static_cast<std::size_t>(v)] = next++;
    for (int v : s)
        for (int w : g.neighbors(v) & s)
            if (v < w) h.add_edge(rank[static_cast<std::size_t>(v)], rank[static_cast<std::size_t>(w)]);
    return h;
}

inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex id out of range");
    if (g.order() == 1) throw std::invalid_argument("cannot delete the last vertex");
    return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

/// Block-diagonal union; labels of part i are offset by the total order of
/// parts 0..i-1.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint union of no graphs");
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    if (total > kMaxOrder) throw std::invalid_argument("disjoint union exceeds 64 vertices");
    Graph g(total);
    int offset = 0;
    for (const Graph& p : parts) {
        for (int v = 0; v < p.order(); ++v)
            for (int w : p.neighbors(v))
                if (v < w) g.add_edge(offset + v, offset + w);
        offset += p.order();
    }
    return g;
}

/// Relabelled copy: result has edge (i, j) iff g has edge
/// (position_to_vertex[i], position_to_vertex[j]).
inline Graph relabel(const Graph& g, const std::vector<int>& position_to_vertex) {
    if (static_cast<int>(position_to_vertex.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(position_to_vertex[static_cast<std::size_t>(i)],
                           position_to_vertex[static_cast<std::size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

inline bool is_tree(const Graph& g) {
    return g.edge_count() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

/// Connected with exactly one cycle, i.e. connected and |E| = |V|.
inline bool is_unicyclic(const Graph& g) {
    return g.edge_count() == static_cast<std::size_t>(g.order()) && is_connected(g);
}

}  // namespace cis
