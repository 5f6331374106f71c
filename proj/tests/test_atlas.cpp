#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "cis/atlas.hpp"
#include "cis/scan.hpp"
#include "oracle.hpp"

using namespace cis;

namespace {

std::set<std::string> code_set(const std::vector<Graph>& graphs) {
    std::set<std::string> codes;
    for (const Graph& g : graphs) codes.insert(emit_graph6(g));
    return codes;
}

}  // namespace

TEST_CASE("catalog sizes match the reference sequences") {
    const std::vector<std::size_t> trees = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        REQUIRE(generate(GraphClass::tree(), n).size() == trees[static_cast<std::size_t>(n - 1)]);

    const std::vector<std::size_t> unicyclic = {1, 2, 5, 13, 33, 89, 240, 657};
    for (int n = 3; n <= 10; ++n)
        REQUIRE(generate(GraphClass::unicyclic(), n).size() ==
                unicyclic[static_cast<std::size_t>(n - 3)]);
    REQUIRE(generate(GraphClass::unicyclic(), 2).empty());

    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        REQUIRE(generate(GraphClass::connected(), n).size() ==
                connected[static_cast<std::size_t>(n - 1)]);

    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        REQUIRE(generate(GraphClass::all(), n).size() == all[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("the five unicyclic graphs of order five") {
    Graph triangle_two_pendants = parse_edge_list("5; 0-1, 1-2, 2-0, 0-3, 1-4");
    std::set<std::string> expected = {
        canonical_form(construct(FamilySpec::cycle(5))),
        canonical_form(construct(FamilySpec::banner(5))),
        canonical_form(construct(FamilySpec::q_graph(5))),
        canonical_form(construct(FamilySpec::tadpole(3, 2))),
        canonical_form(triangle_two_pendants),
    };
    REQUIRE(expected.size() == 5);
    REQUIRE(code_set(generate(GraphClass::unicyclic(), 5)) == expected);
}

TEST_CASE("small catalogs are exactly right") {
    auto tree1 = generate(GraphClass::tree(), 1);
    REQUIRE(tree1.size() == 1);
    REQUIRE(tree1.front() == Graph(1));

    REQUIRE(generate(GraphClass::connected(), 4).size() == 6);

    auto r2 = generate(GraphClass::r_components(2), 5);
    REQUIRE(r2.size() == 8);  // 6 connected(4)+K1 and 2 connected(3)+connected(2)
    for (const Graph& g : r2) REQUIRE(connected_components(g).size() == 2);

    // one component is just the connected class
    REQUIRE(catalog_codes(generate(GraphClass::r_components(1), 6)) ==
            catalog_codes(generate(GraphClass::connected(), 6)));
}

TEST_CASE("yielded graphs satisfy the class predicates and arrive in code order") {
    for (auto cls : {GraphClass::tree(), GraphClass::unicyclic(), GraphClass::connected(),
                     GraphClass::all(), GraphClass::r_components(2), GraphClass::r_components(3)}) {
        for (int n = 3; n <= 6; ++n) {
            std::vector<Graph> graphs = generate(cls, n);
            std::vector<std::string> codes;
            for (const Graph& g : graphs) {
                REQUIRE(cls.contains(g));
                codes.push_back(emit_graph6(g));
                REQUIRE(canonical_form(g) == codes.back());  // canonically labelled
            }
            REQUIRE(std::is_sorted(codes.begin(), codes.end()));
            REQUIRE(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
        }
    }
}

TEST_CASE("catalogs agree with filtering all labeled graphs") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, Graph> by_code;
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            by_code.emplace(canonical_form(g), g);
        });

        auto filtered = [&](GraphClass cls) {
            std::set<std::string> codes;
            for (const auto& [code, g] : by_code)
                if (cls.contains(g)) codes.insert(code);
            return codes;
        };

        REQUIRE(code_set(generate(GraphClass::all(), n)) == filtered(GraphClass::all()));
        REQUIRE(code_set(generate(GraphClass::connected(), n)) ==
                filtered(GraphClass::connected()));
        REQUIRE(code_set(generate(GraphClass::tree(), n)) == filtered(GraphClass::tree()));
        if (n >= 3)
            REQUIRE(code_set(generate(GraphClass::unicyclic(), n)) ==
                    filtered(GraphClass::unicyclic()));
        for (int r = 2; r <= 3 && r <= n; ++r)
            REQUIRE(code_set(generate(GraphClass::r_components(r), n)) ==
                    filtered(GraphClass::r_components(r)));
    }
}

TEST_CASE("order-7 catalogs carry the right total automorphism mass") {
    // Sum of n!/|Aut| over an isomorphism-free catalog equals the labeled
    // count, which is known independently; this catches both missing and
    // duplicated classes.
    const BigCount factorial7 = 5040;

    auto labeled_mass = [&](GraphClass cls) {
        BigCount mass = 0;
        for (const Graph& g : generate(cls, 7))
            mass += factorial7 / oracle::automorphism_count(g);
        return mass;
    };

    // all graphs: 2^C(7,2)
    REQUIRE(labeled_mass(GraphClass::all()) == pow2(21));

    // connected graphs: the standard subtraction recurrence
    std::vector<BigCount> connected_labeled(8);
    for (int n = 1; n <= 7; ++n) {
        BigCount total = pow2(n * (n - 1) / 2);
        for (int k = 1; k < n; ++k)
            total -= binomial(n - 1, k - 1) * connected_labeled[static_cast<std::size_t>(k)] *
                     pow2((n - k) * (n - k - 1) / 2);
        connected_labeled[static_cast<std::size_t>(n)] = total;
    }
    REQUIRE(labeled_mass(GraphClass::connected()) == connected_labeled[7]);

    // trees: Cayley's n^(n-2)
    BigCount cayley = 1;
    for (int i = 0; i < 5; ++i) cayley *= 7;
    REQUIRE(labeled_mass(GraphClass::tree()) == cayley);

    // unicyclic: sum over cycle sizes of C(n,k) (k-1)!/2 k n^(n-k-1)
    BigCount unicyclic_labeled = 0;
    for (int k = 3; k < 7; ++k) {
        BigCount cycles = binomial(7, k);
        for (int i = 2; i < k; ++i) cycles *= i;
        cycles /= 2;
        BigCount forests = k;
        for (int i = 0; i < 7 - k - 1; ++i) forests *= 7;
        unicyclic_labeled += cycles * forests;
    }
    unicyclic_labeled += BigCount(720) / 2;  // the 7-cycle itself: 6!/2
    REQUIRE(labeled_mass(GraphClass::unicyclic()) == unicyclic_labeled);
}

TEST_CASE("generation caps") {
    REQUIRE_THROWS_AS(generate(GraphClass::all(), 9), std::invalid_argument);
    REQUIRE_THROWS_AS(generate(GraphClass::connected(), 10), std::invalid_argument);
    REQUIRE_THROWS_AS(generate(GraphClass::tree(), 13), std::invalid_argument);
    REQUIRE_THROWS_AS(generate(GraphClass::unicyclic(), 13), std::invalid_argument);
    REQUIRE_THROWS_AS(generate(GraphClass::r_components(2), 10), std::invalid_argument);
    REQUIRE_THROWS_AS(generate(GraphClass::all(), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(GraphClass::r_components(0), std::invalid_argument);
}

TEST_CASE("external catalog files cross-check the generator") {
    std::vector<Graph> atlas = generate(GraphClass::unicyclic(), 6);
    std::string path = "atlas_cross_check.g6";
    {
        std::ofstream out(path);
        // write in reverse order; set comparison must not care
        for (auto it = atlas.rbegin(); it != atlas.rend(); ++it)
            out << emit_graph6(*it) << "\n";
    }
    std::vector<Graph> imported = read_graph_file(path);
    std::remove(path.c_str());
    REQUIRE(imported.size() == atlas.size());
    std::set<std::string> canon;
    for (const Graph& g : imported) canon.insert(canonical_form(g));
    REQUIRE(canon == code_set(atlas));
}

TEST_CASE("generation is deterministic") {
    auto a = catalog_codes(generate(GraphClass::connected(), 6));
    auto b = catalog_codes(generate(GraphClass::connected(), 6));
    REQUIRE(a == b);
}
