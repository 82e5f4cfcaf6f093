#include "seqcube/linear_complexity.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "seqcube/errors.hpp"

namespace seqcube {

namespace detail {

LinearComplexity games_chan_word(std::uint64_t bits, int n) {
    LinearComplexity lc = 0;
    for (int len = 1 << n; len > 1;) {
        const int h = len >> 1;  // h <= 32 for n <= 6
        const std::uint64_t mask = (std::uint64_t{1} << h) - 1;
        const std::uint64_t left = bits & mask;
        const std::uint64_t right = (bits >> h) & mask;
        if (left == right) {
            bits = left;
        } else {
            lc += static_cast<LinearComplexity>(h);
            bits = left ^ right;
        }
        len = h;
    }
    return lc + (bits & 1);
}

}  // namespace detail

LinearComplexity games_chan_lc(const PeriodicSequence& s) {
    const int n = s.exponent();
    if (n <= 6) return detail::games_chan_word(s.as_word(), n);

    std::vector<std::uint64_t> buf = s.words();
    LinearComplexity lc = 0;
    std::size_t words = buf.size();
    while (words > 1) {
        const std::size_t hw = words / 2;
        if (std::equal(buf.begin(), buf.begin() + hw, buf.begin() + hw, buf.begin() + words)) {
            // keep Left
        } else {
            lc += static_cast<LinearComplexity>(hw) * 64;
            for (std::size_t i = 0; i < hw; ++i) buf[i] ^= buf[hw + i];
        }
        words = hw;
    }
    return lc + detail::games_chan_word(buf[0], 6);
}

namespace {

// Suffix-xor ladder: bit i of the result = parity of bits i..63 of x.
std::uint64_t suffix_parity(std::uint64_t x) {
    x ^= x >> 1;
    x ^= x >> 2;
    x ^= x >> 4;
    x ^= x >> 8;
    x ^= x >> 16;
    x ^= x >> 32;
    return x;
}

// One synthetic division by (x+1) over GF(2): q_i = parity of p_{i+1..}.
// Requires even overall parity (exact division).
void divide_by_x_plus_1(std::vector<std::uint64_t>& p) {
    std::uint64_t carry = 0;  // parity of all bits in strictly higher words
    for (std::size_t w = p.size(); w-- > 0;) {
        const std::uint64_t word = p[w];
        std::uint64_t q = suffix_parity(word >> 1);
        if (carry) q = ~q;
        p[w] = q;
        carry ^= static_cast<std::uint64_t>(std::popcount(word)) & 1;
    }
}

}  // namespace

LinearComplexity lc_by_factor_multiplicity(const PeriodicSequence& s) {
    if (s.is_zero()) return 0;
    const std::uint64_t period = s.period();
    std::vector<std::uint64_t> p = s.words();
    std::uint64_t v = 0;
    auto is_zero = [&] {
        return std::all_of(p.begin(), p.end(), [](std::uint64_t w) { return w == 0; });
    };
    auto parity = [&] {
        std::uint64_t acc = 0;
        for (std::uint64_t w : p) acc ^= static_cast<std::uint64_t>(std::popcount(w));
        return acc & 1;
    };
    while (parity() == 0) {
        if (is_zero()) return 0;  // unreachable for nonzero input; kept as the documented convention
        divide_by_x_plus_1(p);
        ++v;
    }
    return period - v;
}

LinearComplexity pair_lc(std::uint64_t i, std::uint64_t j, int n) {
    if (n < 1 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range");
    const std::uint64_t period = std::uint64_t{1} << n;
    if (i >= j || j >= period)
        throw DomainError("pair_lc requires 0 <= i < j < 2^n");
    const int r = std::countr_zero(j - i);
    return period - (std::uint64_t{1} << r);
}

LinearComplexity quad_lc_predictor(std::uint64_t i, std::uint64_t j, std::uint64_t k,
                                   std::uint64_t l, int n) {
    if (n < 1 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range");
    const std::uint64_t period = std::uint64_t{1} << n;
    if (i >= j || k >= l || j >= period || l >= period)
        throw DomainError("quad_lc_predictor requires i < j and k < l within the period");
    if (i == k || i == l || j == k || j == l)
        throw DomainError("quad_lc_predictor requires four distinct positions");
    if (i >= k) throw DomainError("quad_lc_predictor requires i < k");
    if ((k - i) % 2 == 0) throw DomainError("quad_lc_predictor requires k - i odd");
    const int d = std::countr_zero(j - i);
    const int e = std::countr_zero(l - k);
    if (d == e) return period - ((std::uint64_t{1} << d) + 1);
    return period - (std::uint64_t{1} << std::min(d, e));
}

}  // namespace seqcube
