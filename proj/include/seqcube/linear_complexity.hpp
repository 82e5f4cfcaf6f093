#pragma once

#include <cstdint>

#include "seqcube/bitseq.hpp"

namespace seqcube {

/// Length of the shortest LFSR generating the sequence; always in [0, 2^n].
using LinearComplexity = std::uint64_t;

/// Games-Chan recursion, implemented iteratively (equal halves keep Left,
/// unequal halves add the half-length and continue on Left xor Right).
/// Zero sequence -> 0.
LinearComplexity games_chan_lc(const PeriodicSequence& s);

/// Independent oracle: 2^n minus the multiplicity of (1+x) dividing the
/// period polynomial over GF(2), computed by repeated synthetic division.
/// Shares no code with games_chan_lc. Zero sequence -> 0.
LinearComplexity lc_by_factor_multiplicity(const PeriodicSequence& s);

/// Closed form for a 2-element support: 2^n - 2^r where j - i = 2^r(1 + 2a).
/// Requires 0 <= i < j < 2^n.
LinearComplexity pair_lc(std::uint64_t i, std::uint64_t j, int n);

/// Closed-form predictor for a 4-element support split into the pairs (i,j)
/// and (k,l): with j-i = 2^d(1+2u) and l-k = 2^e(1+2v), returns
/// 2^n - (2^d + 1) when d = e, else 2^n - 2^min(d,e).
///
/// Requires i < j, k < l, i < k, k - i odd, all four positions distinct and
/// below 2^n. This is a predictor, not an oracle: it is pairing-sensitive
/// and can disagree with games_chan_lc (see the census audit).
LinearComplexity quad_lc_predictor(std::uint64_t i, std::uint64_t j, std::uint64_t k,
                                   std::uint64_t l, int n);

namespace detail {

/// Word-sized Games-Chan for periods up to 64 bits (n <= 6).
LinearComplexity games_chan_word(std::uint64_t bits, int n);

}  // namespace detail

}  // namespace seqcube
