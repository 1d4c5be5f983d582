#include <doctest.h>

#include <random>

#include "dmp/errors.hpp"
#include "dmp/graph.hpp"
#include "test_util.hpp"

using namespace dmp;

namespace {

bool valid_odd_cycle(const Graph& g, const OddCycleWitness& w) {
    const auto& c = w.cycle;
    if (c.size() < 3 || c.size() % 2 == 0) return false;
    std::uint64_t seen = 0;
    for (int v : c) {
        if ((seen >> v) & 1) return false;
        seen |= std::uint64_t{1} << v;
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!g.has_edge(c[i], c[i + 1])) return false;
    return g.has_edge(c.front(), c.back());
}

}  // namespace

TEST_CASE("from_edges builds the stated graphs") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3 == complete_graph(3));

    const Graph e2 = Graph::from_edges(2, {});
    CHECK(e2.edge_count() == 0);
    CHECK(e2.order() == 2);

    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4 == path_graph(4));
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);
}

TEST_CASE("from_edges rejects each violation distinctly") {
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 3}}), doctest::Contains("out of range"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{1, 1}}), doctest::Contains("self-loop"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"),
                         ValidationError);
    CHECK_THROWS_AS(Graph(65), ValidationError);
}

TEST_CASE("families have the documented shapes") {
    const Graph k5 = make_family(FamilyKind::Complete, {5});
    for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

    const Graph k23 = make_family(FamilyKind::CompleteBipartite, {2, 3});
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(1) == 3);
    CHECK(k23.degree(2) == 2);
    CHECK(k23.degree(3) == 2);
    CHECK(k23.degree(4) == 2);

    const Graph m3 = make_family(FamilyKind::Matching, {3});
    CHECK(m3.order() == 6);
    for (int v = 0; v < 6; ++v) CHECK(m3.degree(v) == 1);

    CHECK_THROWS_AS(make_family(FamilyKind::Complete, {1, 2}), ValidationError);
    CHECK_THROWS_AS(make_family(FamilyKind::Matching, {-1}), ValidationError);
    CHECK_THROWS_AS(cycle_graph(2), ValidationError);
}

TEST_CASE("graph algebra") {
    CHECK(complement(complete_graph(5)).edge_count() == 0);

    const Graph u = disjoint_union(complete_bipartite_graph(2, 3), matching_graph(1));
    CHECK(u.order() == 7);
    CHECK(u.edge_count() == 7);
    CHECK(u.degree(5) == 1);
    CHECK(u.degree(6) == 1);

    const Graph e = induced_subgraph(path_graph(4), {1, 2});
    CHECK(e.order() == 2);
    CHECK(e.has_edge(0, 1));

    CHECK_THROWS_AS(disjoint_union(complete_graph(40), complete_graph(40)), ValidationError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Graph g = testutil::random_graph(rng, 1 + static_cast<int>(rng() % 16), 0.4);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("bipartition_of: examples") {
    const auto k23 = bipartition_of(complete_bipartite_graph(2, 3));
    REQUIRE(std::holds_alternative<Bipartition>(k23));
    const auto& b = std::get<Bipartition>(k23);
    CHECK(mask_to_vertices(b.left) == std::vector<int>{0, 1});
    CHECK(mask_to_vertices(b.right) == std::vector<int>{2, 3, 4});

    const auto c5 = bipartition_of(cycle_graph(5));
    REQUIRE(std::holds_alternative<OddCycleWitness>(c5));
    CHECK(std::get<OddCycleWitness>(c5).cycle.size() == 5);
    CHECK(valid_odd_cycle(cycle_graph(5), std::get<OddCycleWitness>(c5)));

    const auto p4 = bipartition_of(path_graph(4));
    REQUIRE(std::holds_alternative<Bipartition>(p4));
    CHECK(mask_to_vertices(std::get<Bipartition>(p4).left) == std::vector<int>{0, 2});
    CHECK(mask_to_vertices(std::get<Bipartition>(p4).right) == std::vector<int>{1, 3});
}

TEST_CASE("bipartition_of agrees with the exhaustive oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = testutil::random_graph(rng, n, 0.1 + 0.08 * static_cast<double>(rng() % 10));
        const auto result = bipartition_of(g);
        if (std::holds_alternative<Bipartition>(result)) {
            CHECK(testutil::brute_bipartite(g));
            const auto& b = std::get<Bipartition>(result);
            CHECK((b.left | b.right) == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
            CHECK((b.left & b.right) == 0);
            for (const auto& [u, v] : g.edges())
                CHECK(((b.left >> u) & 1) != ((b.left >> v) & 1));
        } else {
            CHECK(!testutil::brute_bipartite(g));
            CHECK(valid_odd_cycle(g, std::get<OddCycleWitness>(result)));
        }
    }
}

TEST_CASE("components") {
    const auto comps = components(disjoint_union(complete_bipartite_graph(2, 3), matching_graph(1)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 5);
    CHECK(comps[1].size() == 2);

    CHECK(components(Graph(3)).size() == 3);
    CHECK(components(complete_graph(7)).size() == 1);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = testutil::random_graph(rng, n, 0.2);
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (const auto& comp : components(g))
            for (int v : comp) ++seen[static_cast<std::size_t>(v)];
        for (int v = 0; v < n; ++v) CHECK(seen[static_cast<std::size_t>(v)] == 1);
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = testutil::random_graph(rng, n, 0.35);
        int sum = 0;
        for (int v = 0; v < n; ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("graph text format round-trips and reports line numbers") {
    const Graph g = disjoint_union(complete_bipartite_graph(2, 3), matching_graph(1));
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);

    CHECK(parse_graph("# comment\ngraph 2\n").order() == 2);
    CHECK_THROWS_WITH_AS(parse_graph("graph 3\ne 0 5\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("graph 3\ne 1 1\n"), doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("graph 3\ne 2 1\n"), doctest::Contains("u < v"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("graph 3\ne 0 1\ne 0 1\n"), doctest::Contains("duplicate"),
                         ParseError);
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("nonsense 1\n"), ParseError);
}
