#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqcube/errors.hpp"

namespace seqcube {

/// One period of a binary sequence with period 2^n, bit index 0 = s_0.
///
/// Bits are packed little-endian into 64-bit words: index i lives at
/// words()[i/64] bit (i%64). Values are immutable in spirit -- every
/// operation below returns a fresh sequence -- but set_bit/flip_bit exist
/// for builders and enumeration loops.
class PeriodicSequence {
public:
    static constexpr int kMaxExponent = 30;

    PeriodicSequence() : n_(0), words_(1, 0) {}

    /// Zero sequence of period 2^n. Exponent 0 is allowed programmatically
    /// (Games-Chan recursion bottoms out there); parsing enforces n >= 1.
    explicit PeriodicSequence(int n);

    static PeriodicSequence zero(int n) { return PeriodicSequence(n); }

    /// Period <= 64: build from the low 2^n bits of a word.
    static PeriodicSequence from_word(int n, std::uint64_t bits);

    int exponent() const { return n_; }
    std::uint64_t period() const { return std::uint64_t{1} << n_; }

    bool bit(std::uint64_t i) const;
    void set_bit(std::uint64_t i, bool value);
    void flip_bit(std::uint64_t i);

    /// Number of ones in one period (W_H).
    std::uint64_t weight() const;
    bool is_zero() const;

    /// Period <= 64: the packed word.
    std::uint64_t as_word() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& mutable_words() { return words_; }

    friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

/// Elementwise sum mod 2. Throws DomainError on period mismatch.
PeriodicSequence operator^(const PeriodicSequence& s, const PeriodicSequence& t);

/// (Left, Right) halves, each with exponent n-1. Throws DomainError for n = 0.
std::pair<PeriodicSequence, PeriodicSequence> halves(const PeriodicSequence& s);

/// Inverse of halves: [left, right] concatenated back into one period.
PeriodicSequence concat_halves(const PeriodicSequence& left, const PeriodicSequence& right);

/// Support of a sequence: strictly increasing positions below 2^n.
struct SupportSet {
    int n = 0;
    std::vector<std::uint64_t> positions;

    std::size_t size() const { return positions.size(); }

    /// Sorts, validates range, rejects duplicates.
    static SupportSet of(int n, std::vector<std::uint64_t> positions);
};

SupportSet support_of(const PeriodicSequence& s);
PeriodicSequence materialize_support(const SupportSet& p);

enum class SequenceFormat { bits, hex, positions };

/// Text -> sequence. bits: "0"/"1" string of length 2^n, leftmost = index 0.
/// hex: 2^n/4 chars, char t packs indices 4t..4t+3 with index 4t in the most
/// significant bit (requires n >= 2). positions: comma-separated indices,
/// duplicates rejected. Throws ParseError; n must be in [1, 30].
PeriodicSequence parse_sequence(std::string_view text, SequenceFormat format, int n);

std::string to_bits_string(const PeriodicSequence& s);
std::string to_hex_string(const PeriodicSequence& s);  // requires n >= 2
std::string to_positions_string(const PeriodicSequence& s);

}  // namespace seqcube
