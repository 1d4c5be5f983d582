#include <doctest.h>

#include <numeric>
#include <random>

#include "dmp/coloring.hpp"
#include "dmp/errors.hpp"
#include "dmp/paths.hpp"
#include "test_util.hpp"

using namespace dmp;

namespace {

EdgeColoring random_coloring(std::mt19937_64& rng, int n, int k) {
    std::vector<std::uint8_t> slots(EdgeColoring::slot_count(n));
    for (auto& s : slots) s = static_cast<std::uint8_t>(rng() % k);
    return EdgeColoring(n, k, std::move(slots));
}

}  // namespace

TEST_CASE("slot indexing is the lexicographic bijection") {
    for (int n = 1; n <= 12; ++n) {
        std::size_t expect = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) CHECK(EdgeColoring::slot_index(n, u, v) == expect++);
        CHECK(expect == EdgeColoring::slot_count(n));
    }
    CHECK_THROWS_AS(EdgeColoring::slot_index(4, 2, 2), ValidationError);
}

TEST_CASE("color_subgraph splits a monochromatic coloring") {
    const EdgeColoring mono(4, 2);  // all slots color 0
    CHECK(color_subgraph(mono, 0) == complete_graph(4));
    CHECK(color_subgraph(mono, 1).edge_count() == 0);
    CHECK(color_subgraph(mono, 1).order() == 4);
    CHECK_THROWS_AS(color_subgraph(mono, 2), ValidationError);
}

TEST_CASE("the color subgraphs partition the edges of K_n") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const int k = 1 + static_cast<int>(rng() % 4);
        const EdgeColoring c = random_coloring(rng, n, k);
        int total = 0;
        for (int j = 0; j < k; ++j) total += color_subgraph(c, j).edge_count();
        CHECK(total == n * (n - 1) / 2);
    }
}

TEST_CASE("verify_coloring finds the least color and validates the witness") {
    const EdgeColoring mono(3, 2);
    const auto verdict = verify_coloring(mono, {3, 3});
    REQUIRE(verdict.found.has_value());
    CHECK(verdict.found->first == 0);
    CHECK(verdict.found->second.vertices.size() == 3);

    // one edge of K_3 in color 0, the star of vertex 0 in color 1: neither
    // class reaches order 3
    EdgeColoring split(3, 2);
    split.set_color(0, 1, 1);
    split.set_color(0, 2, 1);
    split.set_color(1, 2, 0);
    CHECK(!verify_coloring(split, {3, 3}).found);
    CHECK(verify_coloring(split, {2, 3}).found->first == 0);
    CHECK(verify_coloring(split, {4, 2}).found->first == 1);

    CHECK_THROWS_AS(verify_coloring(mono, {3}), ValidationError);
    CHECK_THROWS_AS(verify_coloring(mono, {3, 0}), ValidationError);
}

TEST_CASE("verify_coloring agrees with mp_exact over the color classes") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 80; ++i) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % 3);
        const EdgeColoring c = random_coloring(rng, n, k);
        Orders orders;
        for (int j = 0; j < k; ++j) orders.push_back(1 + static_cast<int>(rng() % (n + 1)));
        const auto verdict = verify_coloring(c, orders);
        int least = -1;
        for (int j = 0; j < k && least == -1; ++j)
            if (mp_exact(color_subgraph(c, j)).value >= orders[static_cast<std::size_t>(j)]) least = j;
        if (least == -1) {
            CHECK(!verdict.found);
        } else {
            REQUIRE(verdict.found.has_value());
            CHECK(verdict.found->first == least);
        }
    }
}

TEST_CASE("verify_coloring is invariant under vertex relabeling") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % 3);
        const EdgeColoring c = random_coloring(rng, n, k);
        Orders orders(static_cast<std::size_t>(k), 3);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(verify_coloring(c, orders).found.has_value() ==
              verify_coloring(permuted(c, perm), orders).found.has_value());
    }
}

TEST_CASE("coloring text format round-trips byte for byte") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        const EdgeColoring c = random_coloring(rng, 2 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 4));
        const std::string text = serialize_coloring(c);
        CHECK(parse_coloring(text) == c);
        CHECK(serialize_coloring(parse_coloring(text)) == text);
    }
    const EdgeColoring k1(1, 3);
    CHECK(parse_coloring(serialize_coloring(k1)) == k1);
}

TEST_CASE("coloring parser reports violations with line numbers") {
    CHECK_THROWS_WITH_AS(parse_coloring("kcoloring 3 2\n0 1 0\n0 2 2\n1 2 0\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_coloring("kcoloring 3 2\n0 1 0\n0 1 1\n"),
                         doctest::Contains("duplicate slot"), ParseError);
    CHECK_THROWS_WITH_AS(parse_coloring("kcoloring 3 2\n0 1 0\n0 2 1\n"),
                         doctest::Contains("missing slot"), ParseError);
    CHECK_THROWS_WITH_AS(parse_coloring("kcoloring 3\n"), doctest::Contains("malformed header"),
                         ParseError);
    CHECK_THROWS_AS(parse_coloring("0 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring("kcoloring 3 2\n1 0 0\n0 2 0\n1 2 0\n"), ParseError);
}
