#include "seqcube/combinatorics.hpp"

namespace seqcube {

std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact at every step
        if (acc > ~std::uint64_t{0}) return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t unrank_combination(int nbits, int k, std::uint64_t rank) {
    // Colex: the subset's top element p satisfies C(p, k) <= rank < C(p+1, k).
    std::uint64_t mask = 0;
    for (int r = k; r > 0; --r) {
        int p = r - 1;
        while (p + 1 < nbits && binomial_saturated(static_cast<std::uint64_t>(p + 1),
                                                   static_cast<std::uint64_t>(r)) <= rank)
            ++p;
        mask |= std::uint64_t{1} << p;
        rank -= binomial_saturated(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(r));
        nbits = p;
    }
    return mask;
}

}  // namespace seqcube
