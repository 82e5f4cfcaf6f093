#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seqcube/linear_complexity.hpp"
#include "test_util.hpp"

using namespace seqcube;
using seqcube::testing::random_sequence;
using seqcube::testing::seq;

TEST_CASE("games_chan_lc on known sequences") {
    CHECK(games_chan_lc(PeriodicSequence(4)) == 0);
    CHECK(games_chan_lc(seq(3, {0, 1})) == 7);
    CHECK(games_chan_lc(seq(3, {0, 1, 2, 3})) == 5);
    CHECK(games_chan_lc(seq(3, {0})) == 8);
    CHECK(games_chan_lc(seq(4, {0, 1, 3, 7})) == 15);
    CHECK(games_chan_lc(seq(3, {1, 7})) == 6);
}

TEST_CASE("factor multiplicity oracle on known sequences") {
    CHECK(lc_by_factor_multiplicity(seq(3, {0, 1, 2, 3})) == 5);  // (1+x)^3 divides exactly
    CHECK(lc_by_factor_multiplicity(seq(3, {0})) == 8);           // constant 1, no factor
    CHECK(lc_by_factor_multiplicity(PeriodicSequence(5)) == 0);
}

TEST_CASE("the two routes agree exhaustively for n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        const std::uint64_t period = std::uint64_t{1} << n;
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << period); ++word) {
            const PeriodicSequence s = PeriodicSequence::from_word(n, word);
            REQUIRE(games_chan_lc(s) == lc_by_factor_multiplicity(s));
        }
    }
}

TEST_CASE("the two routes agree on random long sequences (vector path)") {
    std::mt19937_64 rng(424242);
    for (int n = 7; n <= 10; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const PeriodicSequence s = random_sequence(n, rng);
            REQUIRE(games_chan_lc(s) == lc_by_factor_multiplicity(s));
        }
    }
}

TEST_CASE("full complexity iff odd weight (exhaustive n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t period = std::uint64_t{1} << n;
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << period); ++word) {
            const PeriodicSequence s = PeriodicSequence::from_word(n, word);
            REQUIRE((games_chan_lc(s) == period) == (s.weight() % 2 == 1));
        }
    }
}

TEST_CASE("complexity of a sum: max when distinct, lower when equal") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t period = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << period); ++a) {
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << period); ++b) {
                const PeriodicSequence s = PeriodicSequence::from_word(n, a);
                const PeriodicSequence t = PeriodicSequence::from_word(n, b);
                const LinearComplexity ls = games_chan_lc(s);
                const LinearComplexity lt = games_chan_lc(t);
                const LinearComplexity lsum = games_chan_lc(s ^ t);
                if (ls != lt)
                    REQUIRE(lsum == std::max(ls, lt));
                else if (ls > 0)
                    REQUIRE(lsum < ls);
            }
        }
    }
    std::mt19937_64 rng(5150);
    for (int n = 4; n <= 5; ++n) {
        for (int rep = 0; rep < 300; ++rep) {
            const PeriodicSequence s = random_sequence(n, rng);
            const PeriodicSequence t = random_sequence(n, rng);
            const LinearComplexity ls = games_chan_lc(s);
            const LinearComplexity lt = games_chan_lc(t);
            const LinearComplexity lsum = games_chan_lc(s ^ t);
            if (ls != lt)
                REQUIRE(lsum == std::max(ls, lt));
            else if (ls > 0)
                REQUIRE(lsum < ls);
        }
    }
}

TEST_CASE("pair_lc closed form") {
    CHECK(pair_lc(0, 1, 3) == 7);
    CHECK(pair_lc(0, 4, 3) == 4);
    CHECK(pair_lc(1, 7, 3) == 6);
    CHECK(pair_lc(1, 7, 3) == games_chan_lc(seq(3, {1, 7})));
    CHECK_THROWS_AS(pair_lc(3, 3, 3), DomainError);
    CHECK_THROWS_AS(pair_lc(5, 1, 3), DomainError);
    CHECK_THROWS_AS(pair_lc(0, 8, 3), DomainError);
}

TEST_CASE("pair_lc agrees with games_chan_lc on every pair up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t period = std::uint64_t{1} << n;
        for (std::uint64_t i = 0; i < period; ++i)
            for (std::uint64_t j = i + 1; j < period; ++j)
                REQUIRE(pair_lc(i, j, n) == games_chan_lc(seq(n, {i, j})));
    }
}

TEST_CASE("quad predictor formula and its known pairing sensitivity") {
    CHECK(quad_lc_predictor(0, 2, 1, 3, 3) == 5);  // d = e = 1
    CHECK(games_chan_lc(seq(3, {0, 1, 2, 3})) == 5);

    CHECK(quad_lc_predictor(0, 1, 3, 7, 4) == 15);  // d = 0, e = 2
    CHECK(games_chan_lc(seq(4, {0, 1, 3, 7})) == 15);

    // Same support, different pairing: predictor says 6, the oracle says 5.
    CHECK(quad_lc_predictor(0, 3, 1, 2, 3) == 6);
    CHECK(games_chan_lc(seq(3, {0, 1, 2, 3})) == 5);
}

TEST_CASE("quad predictor rejects hypothesis violations") {
    CHECK_THROWS_AS(quad_lc_predictor(0, 1, 2, 3, 3), DomainError);  // k - i even
    CHECK_THROWS_AS(quad_lc_predictor(0, 1, 1, 2, 3), DomainError);  // overlap
    CHECK_THROWS_AS(quad_lc_predictor(2, 3, 1, 4, 3), DomainError);  // i >= k
    CHECK_THROWS_AS(quad_lc_predictor(1, 0, 2, 3, 3), DomainError);  // i >= j
    CHECK_THROWS_AS(quad_lc_predictor(0, 1, 3, 8, 3), DomainError);  // out of period
}

TEST_CASE("maximum complexity among even-weight sequences is 2^n - 1 (n = 3)") {
    LinearComplexity best = 0;
    for (std::uint64_t word = 1; word < 256; ++word) {
        const PeriodicSequence s = PeriodicSequence::from_word(3, word);
        if (s.weight() % 2 != 0) continue;
        best = std::max(best, games_chan_lc(s));
    }
    CHECK(best == 7);
    CHECK(games_chan_lc(seq(3, {0, 1})) == 7);  // attained
}
