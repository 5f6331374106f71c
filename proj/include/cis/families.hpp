#pragma once

#include <string>
#include <string_view>

#include "cis/graph.hpp"

namespace cis {

enum class Family {
    edgeless,
    path,
    cycle,
    star,
    complete,
    tadpole,
    banner,
    q_graph,
    complete_minus_matching,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::edgeless: return "edgeless";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::tadpole: return "tadpole";
        case Family::banner: return "banner";
        case Family::q_graph: return "q_graph";
        case Family::complete_minus_matching: return "complete_minus_matching";
    }
    return "?";
}

inline Family family_from_name(std::string_view name) {
    for (Family f : {Family::edgeless, Family::path, Family::cycle, Family::star,
                     Family::complete, Family::tadpole, Family::banner, Family::q_graph,
                     Family::complete_minus_matching})
        if (name == family_name(f)) return f;
    throw parse_error("unknown family: " + std::string(name));
}

/// Tagged description of a named graph family. Parameter meaning per tag:
/// (n) for single-parameter families, (p, q) for the tadpole, (n, l) for the
/// complete graph minus a matching of l edges.
struct FamilySpec {
    Family family = Family::path;
    int a = 0;
    int b = 0;

    static FamilySpec edgeless(int n) { return {Family::edgeless, n, 0}; }
    static FamilySpec path(int n) { return {Family::path, n, 0}; }
    static FamilySpec cycle(int n) { return {Family::cycle, n, 0}; }
    static FamilySpec star(int n) { return {Family::star, n, 0}; }
    static FamilySpec complete(int n) { return {Family::complete, n, 0}; }
    static FamilySpec tadpole(int p, int q) { return {Family::tadpole, p, q}; }
    static FamilySpec banner(int n) { return {Family::banner, n, 0}; }
    static FamilySpec q_graph(int n) { return {Family::q_graph, n, 0}; }
    static FamilySpec complete_minus_matching(int n, int l) {
        return {Family::complete_minus_matching, n, l};
    }

    int order() const { return family == Family::tadpole ? a + b : a; }

    std::string to_string() const {
        std::string s = family_name(family);
        s += '(';
        s += std::to_string(a);
        if (family == Family::tadpole || family == Family::complete_minus_matching) {
            s += ',';
            s += std::to_string(b);
        }
        s += ')';
        return s;
    }
};

inline void validate(const FamilySpec& spec) {
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string(family_name(spec.family)) + ": " + what);
    };
    switch (spec.family) {
        case Family::edgeless:
        case Family::path:
        case Family::star:
        case Family::complete:
            if (spec.a < 1) fail("order must be >= 1");
            break;
        case Family::cycle:
            if (spec.a < 3) fail("order must be >= 3");
            break;
        case Family::tadpole:
            if (spec.a < 3) fail("cycle length p must be >= 3");
            if (spec.b < 0) fail("tail length q must be >= 0");
            break;
        case Family::banner:
            if (spec.a < 4) fail("order must be >= 4");
            break;
        case Family::q_graph:
            if (spec.a < 3) fail("order must be >= 3");
            break;
        case Family::complete_minus_matching:
            if (spec.a < 3) fail("order must be >= 3");
            if (spec.b < 0 || 2 * spec.b > spec.a) fail("matching size l must be in 0..n/2");
            break;
    }
    if (spec.order() > kMaxOrder) fail("order exceeds 64");
}

/// Builds the family member with a fixed labelling, part of the public
/// contract:
///   path      vertex 0 is an end, edges (i, i+1)
///   cycle     vertices in cyclic order 0, 1, ..., n-1
///   star      vertex 0 is the center
///   tadpole   vertex 0 is the cycle/tail junction; cycle 0..p-1, tail p..p+q-1
///   banner    vertex 0 is the cycle vertex carrying the pendant edges;
///             cycle 0,1,2,3, pendants 4..n-1
///   q_graph   vertex 0 is the hub (star center); the extra edge joins
///             leaves 1 and 2
///   complete_minus_matching   removed edges are (0,1), (2,3), ..., (2l-2, 2l-1)
inline Graph construct(const FamilySpec& spec) {
    validate(spec);
    int n = spec.order();
    Graph g(n);
    switch (spec.family) {
        case Family::edgeless:
            break;
        case Family::path:
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            break;
        case Family::cycle:
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(n - 1, 0);
            break;
        case Family::star:
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            break;
        case Family::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            break;
        case Family::tadpole: {
            int p = spec.a, q = spec.b;
            for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
            g.add_edge(p - 1, 0);
            if (q > 0) {
                g.add_edge(0, p);
                for (int i = 0; i + 1 < q; ++i) g.add_edge(p + i, p + i + 1);
            }
            break;
        }
        case Family::banner:
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 3);
            g.add_edge(3, 0);
            for (int i = 4; i < n; ++i) g.add_edge(0, i);
            break;
        case Family::q_graph:
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            g.add_edge(1, 2);
            break;
        case Family::complete_minus_matching:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    bool removed = j == i + 1 && i % 2 == 0 && i < 2 * spec.b;
                    if (!removed) g.add_edge(i, j);
                }
            break;
    }
    return g;
}

}  // namespace cis
