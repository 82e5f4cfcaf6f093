#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seqcube/bitseq.hpp"
#include "test_util.hpp"

using namespace seqcube;
using seqcube::testing::random_sequence;
using seqcube::testing::seq;

TEST_CASE("parse bits") {
    const PeriodicSequence s = parse_sequence("11110000", SequenceFormat::bits, 3);
    CHECK(support_of(s).positions == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(s.weight() == 4);

    CHECK_THROWS_AS(parse_sequence("1111000", SequenceFormat::bits, 3), ParseError);
    CHECK_THROWS_AS(parse_sequence("1111000x", SequenceFormat::bits, 3), ParseError);
    CHECK_THROWS_AS(parse_sequence("11", SequenceFormat::bits, 0), ParseError);
    CHECK_THROWS_AS(parse_sequence("11", SequenceFormat::bits, 31), ParseError);
}

TEST_CASE("parse positions") {
    const PeriodicSequence s = parse_sequence("0,1,3,4,7,8", SequenceFormat::positions, 4);
    CHECK(support_of(s).positions == std::vector<std::uint64_t>{0, 1, 3, 4, 7, 8});
    CHECK(s.weight() == 6);

    // unsorted input is accepted, duplicates and out-of-range are not
    CHECK(parse_sequence("8,0,3", SequenceFormat::positions, 4) ==
          parse_sequence("0,3,8", SequenceFormat::positions, 4));
    CHECK_THROWS_AS(parse_sequence("0,0", SequenceFormat::positions, 3), ParseError);
    CHECK_THROWS_AS(parse_sequence("8", SequenceFormat::positions, 3), ParseError);
    CHECK_THROWS_AS(parse_sequence("1,x", SequenceFormat::positions, 3), ParseError);
    CHECK(parse_sequence("", SequenceFormat::positions, 3).is_zero());
}

TEST_CASE("parse hex: index 4t sits in the most significant bit of char t") {
    CHECK(parse_sequence("F0", SequenceFormat::hex, 3) ==
          parse_sequence("11110000", SequenceFormat::bits, 3));
    CHECK(parse_sequence("8", SequenceFormat::hex, 2) ==
          parse_sequence("1000", SequenceFormat::bits, 2));
    CHECK(parse_sequence("a5", SequenceFormat::hex, 3) ==
          parse_sequence("10100101", SequenceFormat::bits, 3));
    CHECK_THROWS_AS(parse_sequence("F", SequenceFormat::hex, 1), ParseError);
    CHECK_THROWS_AS(parse_sequence("FG", SequenceFormat::hex, 3), ParseError);
    CHECK_THROWS_AS(parse_sequence("F00", SequenceFormat::hex, 3), ParseError);
}

TEST_CASE("serialize round-trips every format") {
    std::mt19937_64 rng(20240811);
    for (int n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const PeriodicSequence s = random_sequence(n, rng);
            CHECK(parse_sequence(to_bits_string(s), SequenceFormat::bits, n) == s);
            const std::string pos = to_positions_string(s);
            if (!s.is_zero())
                CHECK(parse_sequence(pos, SequenceFormat::positions, n) == s);
            if (n >= 2) CHECK(parse_sequence(to_hex_string(s), SequenceFormat::hex, n) == s);
        }
    }
}

TEST_CASE("hamming weight") {
    CHECK(PeriodicSequence(3).weight() == 0);
    CHECK(seq(3, {0, 1, 2, 3}).weight() == 4);
    CHECK(seq(4, {0, 1, 3, 4, 7, 8}).weight() == 6);
}

TEST_CASE("xor examples") {
    const PeriodicSequence s = seq(4, {0, 1, 3, 4, 7, 8});
    CHECK((s ^ s).is_zero());
    CHECK((s ^ PeriodicSequence(4)) == s);
    CHECK((seq(4, {0, 8}) ^ s) == seq(4, {1, 3, 4, 7}));
    CHECK_THROWS_AS(seq(3, {0}) ^ seq(4, {0}), DomainError);
}

TEST_CASE("xor algebra and the weight parity homomorphism") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const PeriodicSequence a = random_sequence(n, rng);
        const PeriodicSequence b = random_sequence(n, rng);
        const PeriodicSequence c = random_sequence(n, rng);
        CHECK((a ^ b) == (b ^ a));
        CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
        CHECK((a ^ b ^ b) == a);
        CHECK((a ^ b).weight() % 2 == (a.weight() + b.weight()) % 2);
    }
}

TEST_CASE("halves") {
    auto [l1, r1] = halves(parse_sequence("11110000", SequenceFormat::bits, 3));
    CHECK(to_bits_string(l1) == "1111");
    CHECK(to_bits_string(r1) == "0000");

    auto [l2, r2] = halves(parse_sequence("10100101", SequenceFormat::bits, 3));
    CHECK(to_bits_string(l2) == "1010");
    CHECK(to_bits_string(r2) == "0101");

    auto [l3, r3] = halves(seq(4, {0, 8}));
    CHECK(support_of(l3).positions == std::vector<std::uint64_t>{0});
    CHECK(support_of(r3).positions == std::vector<std::uint64_t>{0});

    CHECK_THROWS_AS(halves(PeriodicSequence(0)), DomainError);
}

TEST_CASE("halves then concat reconstructs the sequence") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const PeriodicSequence s = random_sequence(n, rng);
        auto [left, right] = halves(s);
        CHECK(concat_halves(left, right) == s);
    }
}

TEST_CASE("support round-trip") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const PeriodicSequence s = random_sequence(n, rng);
        CHECK(materialize_support(support_of(s)) == s);
    }
    CHECK_THROWS_AS(SupportSet::of(3, {1, 1}), DomainError);
    CHECK_THROWS_AS(SupportSet::of(3, {8}), DomainError);
}
