#pragma once

#include <string>
#include <vector>

#include "cis/atlas.hpp"
#include "cis/families.hpp"

namespace cis {

/// Exact binomial coefficient; 0 outside 0 <= k <= n.
inline BigCount binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigCount pow2(int e) {
    if (e < 0) throw std::invalid_argument("negative power of two");
    return BigCount(1) << e;
}

/// Closed-form total count of connected induced subgraphs for the named
/// families, as pure arithmetic (no graph is built):
///   edgeless  n                     path      C(n+1, 2)
///   cycle     n^2 - n + 1           star      n - 1 + 2^(n-1)
///   complete  2^n - 1               banner    2 + n + 7 * 2^(n-4)
///   q_graph   n + 2^(n-1)
///   tadpole   C(p,2) + C(q+1,2) + (q+1)(p^2 - p + 2)/2
/// complete_minus_matching has no known closed form and is rejected.
inline BigCount closed_form_total(const FamilySpec& spec) {
    validate(spec);
    int n = spec.order();
    switch (spec.family) {
        case Family::edgeless: return n;
        case Family::path: return binomial(n + 1, 2);
        case Family::cycle: return BigCount(n) * n - n + 1;
        case Family::star: return n - 1 + pow2(n - 1);
        case Family::complete: return pow2(n) - 1;
        case Family::tadpole: {
            BigCount p = spec.a, q = spec.b;
            return binomial(spec.a, 2) + binomial(spec.b + 1, 2) + (q + 1) * (p * p - p + 2) / 2;
        }
        case Family::banner: return 2 + n + 7 * pow2(n - 4);
        case Family::q_graph: return n + pow2(n - 1);
        case Family::complete_minus_matching:
            throw std::invalid_argument("complete_minus_matching has no closed-form total");
    }
    throw std::invalid_argument("unknown family");
}

enum class BoundId {
    min_total_graph,
    max_total_graph,
    min_Nk_connected,
    max_Nk_connected,
    min_total_unicyclic,
    max_total_unicyclic,
    min_rooted_subtrees,
    max_rooted_subtrees,
    max_rooted_leaf_subtrees,
    min_total_r_components,
    max_total_r_components,
};

inline const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::min_total_graph: return "min_total_graph";
        case BoundId::max_total_graph: return "max_total_graph";
        case BoundId::min_Nk_connected: return "min_Nk_connected";
        case BoundId::max_Nk_connected: return "max_Nk_connected";
        case BoundId::min_total_unicyclic: return "min_total_unicyclic";
        case BoundId::max_total_unicyclic: return "max_total_unicyclic";
        case BoundId::min_rooted_subtrees: return "min_rooted_subtrees";
        case BoundId::max_rooted_subtrees: return "max_rooted_subtrees";
        case BoundId::max_rooted_leaf_subtrees: return "max_rooted_leaf_subtrees";
        case BoundId::min_total_r_components: return "min_total_r_components";
        case BoundId::max_total_r_components: return "max_total_r_components";
    }
    return "?";
}

inline BoundId bound_from_name(const std::string& name) {
    for (BoundId id : {BoundId::min_total_graph, BoundId::max_total_graph,
                       BoundId::min_Nk_connected, BoundId::max_Nk_connected,
                       BoundId::min_total_unicyclic, BoundId::max_total_unicyclic,
                       BoundId::min_rooted_subtrees, BoundId::max_rooted_subtrees,
                       BoundId::max_rooted_leaf_subtrees, BoundId::min_total_r_components,
                       BoundId::max_total_r_components})
        if (name == bound_name(id)) return id;
    throw parse_error("unknown bound: " + name);
}

/// Extremal bound with its parameters: (n), (n, k) for the per-order bounds,
/// (n, r) for the component bounds.
struct BoundSpec {
    BoundId id;
    int n = 0;
    int k = 0;
    int r = 0;
};

/// The multiset of r part sizes of n that differ pairwise by at most one:
/// ceil(n/r) repeated (n mod r) times, then floor(n/r). Descending.
inline std::vector<int> near_equal_parts(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
    std::vector<int> parts;
    for (int i = 0; i < n % r; ++i) parts.push_back(n / r + 1);
    for (int i = n % r; i < r; ++i) parts.push_back(n / r);
    return parts;
}

inline BigCount bound_value(const BoundSpec& b) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string(bound_name(b.id)) + ": " + what);
    };
    switch (b.id) {
        case BoundId::min_total_graph:
            need(b.n >= 1, "n must be >= 1");
            return b.n;
        case BoundId::max_total_graph:
            need(b.n >= 1, "n must be >= 1");
            return pow2(b.n) - 1;
        case BoundId::min_Nk_connected:
            need(b.n >= 1 && b.k >= 1 && b.k <= b.n, "need 1 <= k <= n");
            return b.n - b.k + 1;
        case BoundId::max_Nk_connected:
            need(b.n >= 3 && b.k >= 3 && b.k <= b.n, "need n >= 3 and 3 <= k <= n");
            return binomial(b.n, b.k);
        case BoundId::min_total_unicyclic:
            need(b.n >= 3, "n must be >= 3");
            return (BigCount(b.n) * b.n + 3 * b.n - 4) / 2;
        case BoundId::max_total_unicyclic:
            need(b.n >= 3, "n must be >= 3");
            // n = 4 is exceptional: there is no Q_4-shaped winner and the
            // 4-cycle's 13 beats 4 + 2^3.
            if (b.n == 4) return 13;
            return b.n + pow2(b.n - 1);
        case BoundId::min_rooted_subtrees:
            need(b.n >= 1, "n must be >= 1");
            return b.n;
        case BoundId::max_rooted_subtrees:
            need(b.n >= 1, "n must be >= 1");
            return pow2(b.n - 1);
        case BoundId::max_rooted_leaf_subtrees:
            need(b.n >= 2, "n must be >= 2");
            return pow2(b.n - 2);
        case BoundId::min_total_r_components: {
            need(b.n >= 1 && b.r >= 1 && b.r <= b.n, "need 1 <= r <= n");
            BigCount sum = 0;
            for (int part : near_equal_parts(b.n, b.r)) sum += binomial(part + 1, 2);
            return sum;
        }
        case BoundId::max_total_r_components:
            need(b.n >= 1 && b.r >= 1 && b.r <= b.n, "need 1 <= r <= n");
            return b.r - 1 + pow2(b.n - b.r + 1) - 1;
    }
    throw std::invalid_argument("unknown bound");
}

/// What an extremal scan optimises.
struct Objective {
    enum class Quantity { total, order_k };
    enum class Direction { minimise, maximise };

    Quantity quantity = Quantity::total;
    Direction direction = Direction::minimise;
    int k = 0;  // for order_k

    static Objective total_min() { return {Quantity::total, Direction::minimise, 0}; }
    static Objective total_max() { return {Quantity::total, Direction::maximise, 0}; }
    static Objective order_k_min(int k) { return {Quantity::order_k, Direction::minimise, k}; }
    static Objective order_k_max(int k) { return {Quantity::order_k, Direction::maximise, k}; }

    std::string name() const {
        std::string q = quantity == Quantity::total ? "total" : "order_" + std::to_string(k);
        return q + (direction == Direction::minimise ? "_min" : "_max");
    }
};

/// The extremizer set the statements predict, as concrete graphs.
/// `characterized` is false where no uniqueness statement exists (such
/// combinations are scanned but never asserted against).
struct ExpectedExtremizers {
    bool characterized = false;
    std::vector<Graph> graphs;
};

inline ExpectedExtremizers expected_extremizers(GraphClass cls, int n, const Objective& obj) {
    ExpectedExtremizers none;
    auto one = [](Graph g) {
        return ExpectedExtremizers{true, {std::move(g)}};
    };
    bool minimise = obj.direction == Objective::Direction::minimise;
    bool total = obj.quantity == Objective::Quantity::total;

    switch (cls.tag) {
        case GraphClass::Tag::all:
            if (!total) return none;
            return one(construct(minimise ? FamilySpec::edgeless(n) : FamilySpec::complete(n)));
        case GraphClass::Tag::tree:
            if (n < 1) return none;
            if (total)
                return one(construct(minimise ? FamilySpec::path(n) : FamilySpec::star(n)));
            // per-order minimum: the path, uniquely, for 2 < k < n
            if (minimise && obj.k > 2 && obj.k < n) return one(construct(FamilySpec::path(n)));
            return none;
        case GraphClass::Tag::connected:
            if (total)
                return one(construct(minimise ? FamilySpec::path(n) : FamilySpec::complete(n)));
            if (minimise) {
                if (obj.k > 2 && obj.k < n) return one(construct(FamilySpec::path(n)));
                return none;
            }
            // per-order maximum: the complete graph minus any matching; the
            // set is exhaustive for k = 3 only.
            if (obj.k == 3 && n >= 3) {
                ExpectedExtremizers e;
                e.characterized = true;
                for (int l = 0; 2 * l <= n; ++l)
                    e.graphs.push_back(construct(FamilySpec::complete_minus_matching(n, l)));
                return e;
            }
            return none;
        case GraphClass::Tag::unicyclic: {
            if (!total || n < 3) return none;
            if (minimise) return one(construct(FamilySpec::tadpole(3, n - 3)));
            if (n == 4) return one(construct(FamilySpec::cycle(4)));
            if (n == 5) {
                ExpectedExtremizers e;
                e.characterized = true;
                e.graphs.push_back(construct(FamilySpec::cycle(5)));
                e.graphs.push_back(construct(FamilySpec::banner(5)));
                e.graphs.push_back(construct(FamilySpec::q_graph(5)));
                return e;
            }
            return one(construct(FamilySpec::q_graph(n)));
        }
        case GraphClass::Tag::r_components: {
            if (!total || cls.r < 1 || cls.r > n) return none;
            if (minimise) {
                std::vector<Graph> paths;
                for (int part : near_equal_parts(n, cls.r))
                    paths.push_back(construct(FamilySpec::path(part)));
                return one(disjoint_union(paths));
            }
            std::vector<Graph> parts(static_cast<std::size_t>(cls.r - 1), Graph(1));
            parts.push_back(construct(FamilySpec::complete(n - cls.r + 1)));
            return one(disjoint_union(parts));
        }
    }
    return none;
}

}  // namespace cis
