#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "cis/atlas.hpp"
#include "cis/counting.hpp"
#include "cis/families.hpp"
#include "cis/formulas.hpp"
#include "oracle.hpp"

using namespace cis;

namespace {

void check_against_oracle(const Graph& g) {
    oracle::NaiveProfile expected = oracle::naive_profile(g);
    CountProfile got = count_profile(g);
    REQUIRE(got.order == g.order());
    REQUIRE(got.total == BigCount(expected.total));
    for (int k = 1; k <= g.order(); ++k)
        REQUIRE(got.nk(k) == BigCount(expected.per_order[static_cast<std::size_t>(k - 1)]));

    // the stream emits exactly the oracle's sets, each exactly once
    std::vector<std::uint64_t> streamed;
    enumerate_cis(g, AnchorQuery::any(), [&](VertexSet s) { streamed.push_back(s.bits()); });
    std::sort(streamed.begin(), streamed.end());
    REQUIRE(std::adjacent_find(streamed.begin(), streamed.end()) == streamed.end());
    REQUIRE(streamed == oracle::naive_cis_sets(g));
}

}  // namespace

TEST_CASE("count profiles match the paper's worked constants") {
    auto total_of = [](const FamilySpec& spec) { return count_profile(construct(spec)).total; };

    CountProfile p3 = count_profile(construct(FamilySpec::path(3)));
    REQUIRE(p3.per_order == std::vector<BigCount>{3, 2, 1});
    REQUIRE(p3.total == 6);

    CountProfile c4 = count_profile(construct(FamilySpec::cycle(4)));
    REQUIRE(c4.per_order == std::vector<BigCount>{4, 4, 4, 1});
    REQUIRE(c4.total == 13);

    REQUIRE(total_of(FamilySpec::cycle(3)) == 7);
    REQUIRE(total_of(FamilySpec::complete(4)) == 15);
    REQUIRE(total_of(FamilySpec::q_graph(5)) == 21);
    REQUIRE(total_of(FamilySpec::q_graph(6)) == 38);
    REQUIRE(total_of(FamilySpec::cycle(5)) == 21);
    REQUIRE(total_of(FamilySpec::banner(5)) == 21);
    REQUIRE(total_of(FamilySpec::tadpole(3, 2)) == 18);
    REQUIRE(total_of(FamilySpec::tadpole(3, 3)) == 25);
    REQUIRE(total_of(FamilySpec::edgeless(5)) == 5);
}

TEST_CASE("enumeration examples") {
    Graph e3 = construct(FamilySpec::edgeless(3));
    auto singletons = enumerate_cis(e3, AnchorQuery::any());
    REQUIRE(singletons.size() == 3);
    for (VertexSet s : singletons) REQUIRE(s.count() == 1);

    Graph c4 = construct(FamilySpec::cycle(4));
    auto edges = enumerate_cis(c4, AnchorQuery::any().with_order(2));
    REQUIRE(edges.size() == 4);
    for (VertexSet s : edges) {
        auto ids = s.ids();
        REQUIRE(c4.has_edge(ids[0], ids[1]));
    }

    Graph k3 = construct(FamilySpec::complete(3));
    auto sets = enumerate_cis(k3, AnchorQuery::any());
    REQUIRE(sets.size() == 7);  // every nonempty subset
}

TEST_CASE("profiles and streams agree with the all-subsets oracle") {
    // the complete isomorphism-free catalog at small orders
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : generate(GraphClass::all(), n)) check_against_oracle(g);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        check_against_oracle(oracle::random_graph(rng, n, 0.05 + 0.009 * (rng() % 100)));
    }
}

TEST_CASE("basic profile identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(rng, n, 0.4);
        CountProfile p = count_profile(g);
        BigCount sum = 0;
        for (const BigCount& c : p.per_order) sum += c;
        REQUIRE(sum == p.total);
        REQUIRE(p.nk(1) == n);
        if (is_connected(g)) {
            REQUIRE(p.nk(2) == BigCount(g.edge_count()));
            REQUIRE(p.nk(n) == 1);
        }
        REQUIRE(p.total >= n);
        REQUIRE(p.total <= pow2(n) - 1);
    }
}

TEST_CASE("anchored counts") {
    Graph s4 = construct(FamilySpec::star(4));
    REQUIRE(count_containing(s4, 0) == 8);        // 2^(n-1) at the center
    REQUIRE(count_containing_pair(s4, 0, 1) == 4);  // 2^(n-2) at center+leaf

    Graph p3 = construct(FamilySpec::path(3));
    REQUIRE(count_containing(p3, 0) == 3);

    for (int n = 3; n <= 10; ++n)
        REQUIRE(count_containing(construct(FamilySpec::q_graph(n)), 0) == pow2(n - 1));

    // middle vertex of P4, frozen from the oracle: sets {1}, {0,1}, {1,2},
    // {0,1,2}, {1,2,3}, {0,1,2,3}
    Graph p4 = construct(FamilySpec::path(4));
    std::uint64_t by_oracle = 0;
    for (std::uint64_t mask : oracle::naive_cis_sets(p4))
        if (mask >> 1 & 1) ++by_oracle;
    REQUIRE(by_oracle == 6);
    REQUIRE(count_containing(p4, 1) == 6);
}

TEST_CASE("anchored counts agree with filtered streams") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(rng, n, 0.3);
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>((u + 1 + rng() % (n - 1)) % n);

        std::uint64_t anchored = 0, paired = 0;
        enumerate_cis(g, AnchorQuery::any(), [&](VertexSet s) {
            if (s.contains(u)) ++anchored;
            if (s.contains(u) && s.contains(v)) ++paired;
        });
        REQUIRE(count_containing(g, u) == BigCount(anchored));
        REQUIRE(count_containing_pair(g, u, v) == BigCount(paired));
        REQUIRE(count_containing_pair(g, u, v) <=
                std::min(count_containing(g, u), count_containing(g, v)));

        // deletion identity: N(G) = N(G)_u + N(G - u)
        if (n >= 2)
            REQUIRE(count_profile(g).total ==
                    count_containing(g, u) + count_profile(delete_vertex(g, u)).total);
    }
}

TEST_CASE("anchored queries on split graphs") {
    Graph e2 = construct(FamilySpec::edgeless(2));
    REQUIRE(count_containing_pair(e2, 0, 1) == 0);  // empty stream is fine
    REQUIRE(enumerate_cis(e2, AnchorQuery::pair(0, 1)).empty());

    Graph g = construct(FamilySpec::complete(4));
    REQUIRE_THROWS_AS(count_containing(g, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(count_containing_pair(g, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_cis(g, AnchorQuery::any().with_order(0)),
                      std::invalid_argument);
}

TEST_CASE("rooted subtree counting") {
    REQUIRE(rooted_subtree_count(construct(FamilySpec::star(5)), 0) == 16);
    REQUIRE(rooted_subtree_count(construct(FamilySpec::path(4)), 0) == 4);
    REQUIRE(rooted_subtree_count(construct(FamilySpec::path(4)), 1) == 6);
    REQUIRE(rooted_subtree_count(Graph(1), 0) == 1);

    REQUIRE_THROWS_AS(rooted_subtree_count(construct(FamilySpec::cycle(3)), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(rooted_subtree_count(construct(FamilySpec::edgeless(3)), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(rooted_subtree_count(construct(FamilySpec::path(3)), 3),
                      std::invalid_argument);
}

TEST_CASE("rooted subtree DP equals anchored enumeration on every small tree") {
    for (int n = 1; n <= 10; ++n)
        for (const Graph& t : generate(GraphClass::tree(), n))
            for (int root = 0; root < n; ++root)
                REQUIRE(rooted_subtree_count(t, root) == count_containing(t, root));
}

TEST_CASE("articulation points and the N_{n-1} identity") {
    Graph p4 = construct(FamilySpec::path(4));
    REQUIRE(articulation_points(p4) == VertexSet(0b0110));
    REQUIRE(non_cut_vertex_count(p4) == 2);

    REQUIRE(non_cut_vertex_count(construct(FamilySpec::cycle(6))) == 6);  // 2-connected

    // computed from the enumeration oracle: the junction and the first tail
    // vertex of the (3,2) tadpole are its cut vertices
    Graph g32 = construct(FamilySpec::tadpole(3, 2));
    oracle::NaiveProfile profile = oracle::naive_profile(g32);
    REQUIRE(profile.per_order[3] == 3);
    REQUIRE(non_cut_vertex_count(g32) == 3);
    REQUIRE(articulation_points(g32) == VertexSet(0b01001));

    REQUIRE_THROWS_AS(articulation_points(construct(FamilySpec::edgeless(3))),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(non_cut_vertex_count(Graph(1)), std::invalid_argument);
}

TEST_CASE("N_{n-1} equals the non-cut count on connected graphs") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : generate(GraphClass::connected(), n)) {
            CountProfile p = count_profile(g);
            REQUIRE(p.nk(n - 1) == BigCount(n - articulation_points(g).count()));
            REQUIRE(p.nk(n - 1) == BigCount(non_cut_vertex_count(g)));
        }
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_connected_graph(rng, n, 0.3);
        REQUIRE(count_profile(g).nk(n - 1) == BigCount(non_cut_vertex_count(g)));
    }
}

TEST_CASE("count by deletion") {
    REQUIRE(count_by_deletion(construct(FamilySpec::cycle(3))) == 7);
    REQUIRE(count_by_deletion(construct(FamilySpec::edgeless(5))) == 5);
    REQUIRE(count_by_deletion(construct(FamilySpec::tadpole(3, 3))) == 25);

    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(rng, n, 0.25);  // frequently disconnected
        REQUIRE(count_by_deletion(g) == count_profile(g).total);
    }
}

TEST_CASE("profile totals add over components") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Graph> parts;
        BigCount sum = 0;
        int budget = 12;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count && budget > 0; ++i) {
            int n = 1 + static_cast<int>(rng() % std::min(budget, 6));
            budget -= n;
            parts.push_back(oracle::random_graph(rng, n, 0.5));
            sum += count_profile(parts.back()).total;
        }
        REQUIRE(count_profile(disjoint_union(parts)).total == sum);
    }
}

TEST_CASE("global bounds with equality exactly at the edgeless and complete graphs") {
    for (int n = 1; n <= 6; ++n) {
        std::string edgeless_code = canonical_form(construct(FamilySpec::edgeless(n)));
        std::string complete_code = canonical_form(construct(FamilySpec::complete(n)));
        for (const Graph& g : generate(GraphClass::all(), n)) {
            BigCount total = count_profile(g).total;
            REQUIRE(total >= n);
            REQUIRE(total <= pow2(n) - 1);
            REQUIRE((total == BigCount(n)) == (emit_graph6(g) == edgeless_code));
            REQUIRE((total == pow2(n) - 1) == (emit_graph6(g) == complete_code));
        }
    }
}
