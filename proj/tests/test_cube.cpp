#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "seqcube/combinatorics.hpp"
#include "seqcube/cube.hpp"
#include "seqcube/linear_complexity.hpp"
#include "test_util.hpp"

using namespace seqcube;
using seqcube::testing::random_sequence;
using seqcube::testing::seq;

namespace {

SupportSet support_from_mask(int n, std::uint64_t mask) {
    std::vector<std::uint64_t> pos;
    while (mask) {
        pos.push_back(static_cast<std::uint64_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return SupportSet{n, std::move(pos)};
}

}  // namespace

TEST_CASE("element distance is the 2-adic part of the difference") {
    CHECK(element_distance(0, 1) == 1);
    CHECK(element_distance(1, 7) == 2);
    CHECK(element_distance(0, 8) == 8);
    CHECK(element_distance(8, 0) == 8);
    CHECK_THROWS_AS(element_distance(5, 5), DomainError);
}

TEST_CASE("cube_lc") {
    CHECK(cube_lc(4, std::vector<int>{0, 1, 2}) == 9);
    CHECK(cube_lc(3, std::vector<int>{0, 1}) == 5);
    CHECK(cube_lc(4, std::vector<int>{1, 3}) == 6);
    CHECK(cube_lc(4, std::vector<int>{1, 3}) == games_chan_lc(seq(4, {4, 6, 12, 14})));
    CHECK(cube_lc(4, std::vector<int>{}) == 16);
    CHECK_THROWS_AS(cube_lc(3, std::vector<int>{1, 1}), DomainError);
    CHECK_THROWS_AS(cube_lc(3, std::vector<int>{3}), DomainError);
}

TEST_CASE("recognize_cube on known supports") {
    auto c1 = recognize_cube(SupportSet::of(3, {0, 1, 2, 3}));
    REQUIRE(c1);
    CHECK(c1->edges == std::vector<int>{0, 1});

    auto c2 = recognize_cube(SupportSet::of(4, {1, 3, 4, 6, 9, 11, 12, 14}));
    REQUIRE(c2);
    CHECK(c2->edges == std::vector<int>{0, 1, 3});
    CHECK(c2->lc() == 5);

    auto c3 = recognize_cube(SupportSet::of(4, {0, 2, 4, 6}));
    REQUIRE(c3);
    CHECK(c3->edges == std::vector<int>{1, 2});

    CHECK(!recognize_cube(SupportSet::of(3, {0, 1, 2})));
    CHECK(!recognize_cube(SupportSet::of(3, {0, 1, 2, 5})));

    // per-pair multipliers are allowed by the definition
    auto c4 = recognize_cube(SupportSet::of(4, {0, 1, 2, 7}));
    REQUIRE(c4);
    CHECK(c4->edges == std::vector<int>{0, 1});

    auto c5 = recognize_cube(SupportSet::of(3, {4}));
    REQUIRE(c5);
    CHECK(c5->edges.empty());

    CHECK_THROWS_AS(recognize_cube(SupportSet{3, {}}), DomainError);
}

TEST_CASE("materialize") {
    CHECK(to_bits_string(materialize(*recognize_cube(SupportSet::of(3, {0, 1})))) == "11000000");
    CHECK(to_bits_string(materialize(*recognize_cube(SupportSet::of(3, {0, 1, 2, 3})))) ==
          "11110000");
    CHECK(materialize(*recognize_cube(SupportSet::of(4, {1, 3, 4, 6, 9, 11, 12, 14}))) ==
          seq(4, {1, 3, 4, 6, 9, 11, 12, 14}));
}

TEST_CASE("construct_cube") {
    const Cube a = construct_cube(3, std::vector<int>{0, 1}, 0, std::vector<std::uint64_t>{1, 1});
    CHECK(a.vertices == std::vector<std::uint64_t>{0, 1, 2, 3});

    const Cube b = construct_cube(4, std::vector<int>{0, 3}, 0, std::vector<std::uint64_t>{9, 1});
    CHECK(b.vertices == std::vector<std::uint64_t>{0, 1, 8, 9});
    CHECK(b.edges == std::vector<int>{0, 3});
    CHECK(games_chan_lc(materialize(b)) == 7);

    const Cube c =
        construct_cube(4, std::vector<int>{0, 1, 2}, 0, std::vector<std::uint64_t>{1, 1, 1});
    CHECK(c.vertices == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(c.lc() == 9);

    CHECK_THROWS_AS(construct_cube(3, std::vector<int>{0}, 0, std::vector<std::uint64_t>{2}),
                    DomainError);
    CHECK_THROWS_AS(construct_cube(3, std::vector<int>{0}, 9, std::vector<std::uint64_t>{1}),
                    DomainError);
    CHECK_THROWS_AS(construct_cube(3, std::vector<int>{0, 1}, 0, std::vector<std::uint64_t>{1}),
                    DomainError);
}

TEST_CASE("every cube constructible at n = 4 has the predicted complexity") {
    // all edge sets x anchors x odd offsets (offset t matters mod 2^{n - i_t})
    const int n = 4;
    std::vector<std::uint64_t> seen;
    for (std::uint64_t edge_mask = 1; edge_mask < 16; ++edge_mask) {
        std::vector<int> edges;
        for (int e = 0; e < 4; ++e)
            if ((edge_mask >> e) & 1) edges.push_back(e);
        std::vector<std::uint64_t> offsets(edges.size(), 1);
        while (true) {
            for (std::uint64_t anchor = 0; anchor < 16; ++anchor) {
                const Cube c = construct_cube(n, edges, anchor, offsets);
                REQUIRE(games_chan_lc(materialize(c)) == cube_lc(n, edges));
                std::uint64_t mask = 0;
                for (std::uint64_t v : c.vertices) mask |= std::uint64_t{1} << v;
                seen.push_back(mask);
            }
            std::size_t t = 0;
            while (t < edges.size()) {
                offsets[t] += 2;
                if (offsets[t] < (std::uint64_t{1} << (n - edges[t]))) break;
                offsets[t] = 1;
                ++t;
            }
            if (t == edges.size()) break;
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(seen.size() == 523);  // distinct vertex sets reached by this parameterization
}

TEST_CASE("recognized cubes at n = 4 all satisfy the complexity formula") {
    // Stronger than the constructible sweep: every support recognized as a
    // cube (523 constructible ones plus per-pair-multiplier shapes).
    std::uint64_t recognized = 0;
    for (int m = 1; m <= 4; ++m) {
        const int size = 1 << m;
        const std::uint64_t count = binomial_saturated(16, static_cast<std::uint64_t>(size));
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        for (std::uint64_t r = 0; r < count; ++r) {
            const auto cube = recognize_cube(support_from_mask(4, mask));
            if (cube) {
                ++recognized;
                REQUIRE(cube->dimension() == m);
                REQUIRE(games_chan_lc(materialize(*cube)) == cube_lc(4, cube->edges));
            }
            mask = gosper_next(mask);
        }
    }
    CHECK(recognized == 779);
}

TEST_CASE("standard decomposition reproduces the worked examples") {
    const CubeDecomposition d1 = standard_decompose(seq(4, {0, 1, 3, 4, 7, 8}));
    REQUIRE(d1.cubes.size() == 3);
    CHECK(!d1.lone_vertex);
    CHECK(d1.cubes[0].vertices == std::vector<std::uint64_t>{0, 8});
    CHECK(d1.cubes[0].lc() == 8);
    CHECK(d1.cubes[1].vertices == std::vector<std::uint64_t>{3, 7});
    CHECK(d1.cubes[1].lc() == 12);
    CHECK(d1.cubes[2].vertices == std::vector<std::uint64_t>{1, 4});
    CHECK(d1.cubes[2].lc() == 15);

    const CubeDecomposition d2 = standard_decompose(seq(4, {0, 3, 4, 6, 9, 11, 12, 14}));
    REQUIRE(d2.cubes.size() == 3);
    CHECK(d2.cubes[0].vertices == std::vector<std::uint64_t>{4, 6, 12, 14});
    CHECK(d2.cubes[0].edges == std::vector<int>{1, 3});
    CHECK(d2.cubes[1].vertices == std::vector<std::uint64_t>{3, 11});
    CHECK(d2.cubes[1].edges == std::vector<int>{3});
    CHECK(d2.cubes[2].vertices == std::vector<std::uint64_t>{0, 9});
    CHECK(d2.cubes[2].edges == std::vector<int>{0});
}

TEST_CASE("decomposing a cube returns exactly that cube") {
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> edges;
        for (int e = 0; e < n; ++e)
            if (rng() % 3 == 0) edges.push_back(e);
        if (edges.empty()) edges.push_back(static_cast<int>(rng() % n));
        std::vector<std::uint64_t> offsets;
        for (int e : edges) {
            const std::uint64_t choices = std::uint64_t{1} << (n - e - 1);  // odd residues mod 2^{n-e}
            offsets.push_back(2 * (rng() % choices) + 1);
        }
        const Cube c = construct_cube(n, edges, rng() % (std::uint64_t{1} << n), offsets);
        const CubeDecomposition d = standard_decompose(materialize(c));
        REQUIRE(d.cubes.size() == 1);
        CHECK(d.cubes[0].vertices == c.vertices);
        CHECK(d.cubes[0].edges == c.edges);
    }
}

TEST_CASE("decomposition invariants on random sequences at n = 5") {
    std::mt19937_64 rng(60601);
    for (int rep = 0; rep < 200; ++rep) {
        const PeriodicSequence s = random_sequence(5, rng);
        if (s.is_zero()) continue;
        const CubeDecomposition d = standard_decompose(s);
        CHECK(d.lone_vertex.has_value() == (s.weight() % 2 == 1));

        PeriodicSequence rebuilt(5);
        std::uint64_t covered = 0;
        LinearComplexity prev = 0;
        for (const Cube& c : d.cubes) {
            rebuilt = rebuilt ^ materialize(c);
            covered += c.vertices.size();
            CHECK(c.lc() > prev);
            prev = c.lc();
            const auto again = recognize_cube(SupportSet{5, c.vertices});
            REQUIRE(again);
            CHECK(again->edges == c.edges);
        }
        if (d.lone_vertex) {
            rebuilt.flip_bit(*d.lone_vertex);
            covered += 1;
        }
        CHECK(rebuilt == s);              // XOR reconstruction; also proves disjointness
        CHECK(covered == s.weight());     // (sizes add up exactly)
        if (s.weight() % 2 == 0) CHECK(d.cubes.back().lc() == games_chan_lc(s));

        // removing every cube but the smallest leaves exactly the smallest
        if (d.cubes.size() > 1 && !d.lone_vertex) {
            PeriodicSequence residual = s;
            for (std::size_t i = 1; i < d.cubes.size(); ++i)
                residual = residual ^ materialize(d.cubes[i]);
            CHECK(games_chan_lc(residual) == d.cubes[0].lc());
        }
    }
}

TEST_CASE("zero and odd-weight decompositions") {
    const CubeDecomposition zero = standard_decompose(PeriodicSequence(4));
    CHECK(zero.cubes.empty());
    CHECK(!zero.lone_vertex);

    const CubeDecomposition single = standard_decompose(seq(4, {5}));
    CHECK(single.cubes.empty());
    REQUIRE(single.lone_vertex);
    CHECK(*single.lone_vertex == 5);

    const CubeDecomposition odd = standard_decompose(seq(3, {0, 1, 2}));
    REQUIRE(odd.lone_vertex);
    REQUIRE(odd.cubes.size() == 1);
}

TEST_CASE("inter-cube distance") {
    const Cube a = *recognize_cube(SupportSet::of(4, {0, 2, 4, 6}));
    const Cube b = *recognize_cube(SupportSet::of(4, {7, 15}));
    CHECK(inter_cube_distance(a, b) == 1);

    const Cube c = *recognize_cube(SupportSet::of(3, {0, 1}));
    const Cube d = *recognize_cube(SupportSet::of(3, {4, 5}));
    CHECK(inter_cube_distance(c, d) == 1);

    const Cube e = *recognize_cube(SupportSet::of(4, {0, 8}));
    const Cube f = *recognize_cube(SupportSet::of(4, {1, 4}));
    CHECK(inter_cube_distance(e, f) == 1);

    CHECK_THROWS_AS(inter_cube_distance(a, a), DomainError);
}

TEST_CASE("uniqueness hint") {
    CHECK(has_unique_decomposition_hint(seq(4, {0, 2, 4, 6, 7, 15})));
    CHECK(!has_unique_decomposition_hint(seq(4, {0, 1, 3, 4, 7, 8})));
    CHECK(has_unique_decomposition_hint(seq(3, {0, 1, 2, 3})));  // single cube
    CHECK_THROWS_AS(has_unique_decomposition_hint(seq(3, {0, 1, 2})), DomainError);
    CHECK_THROWS_AS(has_unique_decomposition_hint(PeriodicSequence(3)), DomainError);
}

TEST_CASE("longest edge lies in the smallest cube") {
    CHECK(longest_edge_in_smallest_cube(standard_decompose(seq(4, {0, 1, 3, 4, 7, 8}))));
    CHECK(longest_edge_in_smallest_cube(standard_decompose(seq(3, {0, 1}))));
    CHECK(longest_edge_in_smallest_cube(standard_decompose(seq(4, {0, 3, 4, 6, 9, 11, 12, 14}))));
    CHECK_THROWS_AS(longest_edge_in_smallest_cube(CubeDecomposition{}), DomainError);
}

TEST_CASE("eight-element family built from nested pair offsets has complexity 2^n - 7") {
    // positions i, j=i+2a+1, k=i+4c+2, l=j+4d+2, then m=i+4+8u, nn=j+4+8v,
    // p=k+4+8w, q=l+4+8y
    const int params[][9] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0},
        {2, 0, 0, 0, 0, 0, 0, 0, 0},
    };
    for (int n = 4; n <= 5; ++n) {
        const std::uint64_t period = std::uint64_t{1} << n;
        int family = 0;
        for (const auto& pr : params) {
            const std::uint64_t i = static_cast<std::uint64_t>(pr[0]);
            const std::uint64_t j = i + 2 * pr[1] + 1;
            const std::uint64_t k = i + 4 * pr[3] + 2;
            const std::uint64_t l = j + 4 * pr[4] + 2;
            const std::uint64_t m = i + 4 + 8 * pr[5];
            const std::uint64_t nn = j + 4 + 8 * pr[6];
            const std::uint64_t p = k + 4 + 8 * pr[7];
            const std::uint64_t q = l + 4 + 8 * pr[8];
            std::vector<std::uint64_t> pos{i, j, k, l, m, nn, p, q};
            std::sort(pos.begin(), pos.end());
            if (pos.back() >= period ||
                std::adjacent_find(pos.begin(), pos.end()) != pos.end())
                continue;
            ++family;
            REQUIRE(games_chan_lc(materialize_support(SupportSet::of(n, pos))) == period - 7);
        }
        CHECK(family >= 8);
    }
}
