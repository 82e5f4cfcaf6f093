#pragma once

#include <cstdint>
#include <limits>

namespace seqcube {

/// Exact C(n, k), saturating at UINT64_MAX on overflow.
std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k);

/// Next k-subset mask in increasing numeric order (Gosper's hack).
/// Caller bounds the iteration count; behavior past the last subset of an
/// N-bit universe is unspecified.
inline std::uint64_t gosper_next(std::uint64_t mask) {
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    return (((mask ^ r) >> 2) / c) | r;
}

/// rank-th k-subset of an nbits-bit universe in increasing numeric (colex)
/// order, rank in [0, C(nbits, k)). Used to split enumeration into
/// contiguous chunks deterministically.
std::uint64_t unrank_combination(int nbits, int k, std::uint64_t rank);

}  // namespace seqcube
