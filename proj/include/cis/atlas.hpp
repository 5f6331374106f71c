#pragma once

#include <map>
#include <string>
#include <vector>

#include "cis/canonical.hpp"
#include "cis/counting.hpp"
#include "cis/families.hpp"

namespace cis {

/// A class of graphs closed under isomorphism, the unit of atlas generation
/// and extremal scans.
struct GraphClass {
    enum class Tag { tree, unicyclic, connected, all, r_components };

    Tag tag = Tag::all;
    int r = 1;  // meaningful for r_components only

    static GraphClass tree() { return {Tag::tree, 1}; }
    static GraphClass unicyclic() { return {Tag::unicyclic, 1}; }
    static GraphClass connected() { return {Tag::connected, 1}; }
    static GraphClass all() { return {Tag::all, 1}; }
    static GraphClass r_components(int r) {
        if (r < 1) throw std::invalid_argument("component count must be >= 1");
        return {Tag::r_components, r};
    }

    bool contains(const Graph& g) const {
        switch (tag) {
            case Tag::tree: return is_tree(g);
            case Tag::unicyclic: return is_unicyclic(g);
            case Tag::connected: return is_connected(g);
            case Tag::all: return true;
            case Tag::r_components:
                return static_cast<int>(connected_components(g).size()) == r;
        }
        return false;
    }

    /// Largest order generate() accepts. Beyond this, either the canonical
    /// search or the sheer catalog size makes exhaustive work unreasonable
    /// on a desk machine.
    int generation_cap() const {
        switch (tag) {
            case Tag::tree:
            case Tag::unicyclic: return 12;
            case Tag::connected: return 9;
            case Tag::all: return 8;
            case Tag::r_components: return 9;
        }
        return 0;
    }

    std::string name() const {
        switch (tag) {
            case Tag::tree: return "tree";
            case Tag::unicyclic: return "unicyclic";
            case Tag::connected: return "connected";
            case Tag::all: return "all";
            case Tag::r_components: return "r_components(" + std::to_string(r) + ")";
        }
        return "?";
    }

    static GraphClass from_name(const std::string& name, int r = 0) {
        if (name == "tree") return tree();
        if (name == "unicyclic") return unicyclic();
        if (name == "connected") return connected();
        if (name == "all") return all();
        if (name == "r_components") return r_components(r);
        throw parse_error("unknown graph class: " + name);
    }
};

namespace detail {

// Vertices whose deletion keeps a graph inside the class. Always nonempty
// for graphs that have a predecessor in the generation order.
inline VertexSet deletion_candidates(const Graph& g, GraphClass::Tag tag) {
    switch (tag) {
        case GraphClass::Tag::tree:
        case GraphClass::Tag::unicyclic: {
            VertexSet leaves;
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) == 1) leaves.add(v);
            return leaves;  // empty only for cycles, which are seeded directly
        }
        case GraphClass::Tag::connected:
            return g.vertices() - articulation_points(g);
        default:
            return g.vertices();
    }
}

// The candidate sitting at the highest canonical position. Well defined up
// to automorphism, which is all the parent test needs.
inline int canonical_deletion_vertex(const Graph& g, VertexSet candidates,
                                     const std::vector<int>& perm) {
    for (int pos = g.order() - 1; pos >= 0; --pos)
        if (candidates.contains(perm[static_cast<std::size_t>(pos)]))
            return perm[static_cast<std::size_t>(pos)];
    throw std::logic_error("no deletion candidate");
}

// Augment parent with one new vertex adjacent to `attach`.
inline Graph extend(const Graph& parent, std::uint64_t attach) {
    Graph child(parent.order() + 1);
    for (int v = 0; v < parent.order(); ++v)
        for (int w : parent.neighbors(v))
            if (v < w) child.add_edge(v, w);
    for (std::uint64_t rest = attach; rest; rest &= rest - 1)
        child.add_edge(std::countr_zero(rest), parent.order());
    return child;
}

std::vector<Graph> generate_r_components(int r, int n);

}  // namespace detail

/// One canonically-labelled representative per isomorphism class of the
/// given class and order, sorted by canonical code. Generation is orderly:
/// each level extends the previous one by a single vertex, and a child
/// survives only if deleting its canonical deletion vertex reproduces the
/// parent it came from. Cycles enter the unicyclic stream as seeds since
/// they have no leaf to delete.
inline std::vector<Graph> generate(GraphClass cls, int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (n > cls.generation_cap())
        throw std::invalid_argument("order beyond the generation cap for class " + cls.name());
    if (cls.tag == GraphClass::Tag::r_components)
        return detail::generate_r_components(cls.r, n);

    std::vector<std::string> level_codes;
    std::vector<Graph> level;
    if (cls.tag != GraphClass::Tag::unicyclic) {
        level.emplace_back(1);
        level_codes.push_back(emit_graph6(level.front()));
    }

    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> next;
        if (cls.tag == GraphClass::Tag::unicyclic && m >= 3) {
            Graph cycle = construct(FamilySpec::cycle(m));
            next.emplace(canonical_form(cycle), relabel(cycle, canonical_permutation(cycle)));
        }
        for (std::size_t p = 0; p < level.size(); ++p) {
            const Graph& parent = level[p];
            const std::string& parent_code = level_codes[p];
            std::uint64_t subsets = std::uint64_t{1} << parent.order();
            for (std::uint64_t attach = 0; attach < subsets; ++attach) {
                switch (cls.tag) {
                    case GraphClass::Tag::tree:
                    case GraphClass::Tag::unicyclic:
                        if (std::popcount(attach) != 1) continue;
                        break;
                    case GraphClass::Tag::connected:
                        if (attach == 0) continue;
                        break;
                    default:
                        break;
                }
                Graph child = detail::extend(parent, attach);
                std::vector<int> perm = canonical_permutation(child);
                int del = detail::canonical_deletion_vertex(
                    child, detail::deletion_candidates(child, cls.tag), perm);
                if (canonical_form(delete_vertex(child, del)) != parent_code) continue;
                next.emplace(emit_graph6(relabel(child, perm)), relabel(child, perm));
            }
        }
        level.clear();
        level_codes.clear();
        for (auto& [code, graph] : next) {
            level_codes.push_back(code);
            level.push_back(std::move(graph));
        }
    }

    if (n == 1) {
        std::vector<Graph> out;
        if (cls.contains(Graph(1))) out.emplace_back(1);
        return out;
    }
    return level;
}

namespace detail {

// Exactly r components: pick an unordered multiset of connected
// representatives whose orders sum to n. Two such unions are isomorphic iff
// the component multisets agree, so no further rejection is needed.
inline std::vector<Graph> generate_r_components(int r, int n) {
    std::vector<Graph> out;
    if (r > n) return out;
    if (r == 1) return generate(GraphClass::connected(), n);

    // connected catalogs for every possible part order
    std::vector<std::vector<Graph>> connected_by_order(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n - r + 1; ++s)
        connected_by_order[static_cast<std::size_t>(s)] = generate(GraphClass::connected(), s);

    std::map<std::string, Graph> found;
    std::vector<int> parts;
    std::vector<Graph> chosen;

    auto assemble = [&]() {
        Graph u = disjoint_union(chosen);
        found.emplace(canonical_form(u), relabel(u, canonical_permutation(u)));
    };

    // choose component indices, non-decreasing within runs of equal order
    auto pick = [&](auto&& self, std::size_t part, int min_index) -> void {
        if (part == parts.size()) {
            assemble();
            return;
        }
        auto size = static_cast<std::size_t>(parts[part]);
        bool same_as_prev = part > 0 && parts[part] == parts[part - 1];
        int start = same_as_prev ? min_index : 0;
        const auto& pool = connected_by_order[size];
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            chosen.push_back(pool[static_cast<std::size_t>(i)]);
            self(self, part + 1, i);
            chosen.pop_back();
        }
    };

    // partitions of n into exactly r parts, descending
    auto partitions = [&](auto&& self, int remaining, int slots, int max_part) -> void {
        if (slots == 0) {
            if (remaining == 0) pick(pick, 0, 0);
            return;
        }
        for (int part = std::min(max_part, remaining - (slots - 1)); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, slots - 1, part);
            parts.pop_back();
        }
    };
    partitions(partitions, n, r, n - r + 1);

    for (auto& [code, graph] : found) out.push_back(std::move(graph));
    return out;
}

}  // namespace detail

/// Codes of a catalog, in stream order.
inline std::vector<std::string> catalog_codes(const std::vector<Graph>& graphs) {
    std::vector<std::string> codes;
    codes.reserve(graphs.size());
    for (const Graph& g : graphs) codes.push_back(emit_graph6(g));
    return codes;
}

}  // namespace cis
