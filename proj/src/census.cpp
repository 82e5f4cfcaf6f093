#include "seqcube/census.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "seqcube/combinatorics.hpp"
#include "seqcube/cube.hpp"
#include "seqcube/errors.hpp"
#include "seqcube/parallel.hpp"

namespace seqcube {

namespace {

// Counts at the spec's parameter scales are tiny; this guard only prevents
// absurd CLI requests from attempting multi-gigabyte allocations.
constexpr std::int64_t kMaxCountBits = std::int64_t{1} << 24;

BigCount pow2_big(std::int64_t exponent) {
    if (exponent < 0) throw InternalCheckError("negative count exponent");
    if (exponent > kMaxCountBits)
        throw DomainError("count exceeds 2^" + std::to_string(kMaxCountBits) +
                          "; refusing to materialize it");
    BigCount r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return r;
}

void check_edge_list(int n, std::span<const int> edges) {
    if (n < 1 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range");
    if (edges.empty()) throw DomainError("edge list must be nonempty");
    for (std::size_t t = 0; t < edges.size(); ++t) {
        if (edges[t] < 0 || edges[t] >= n)
            throw DomainError("edge exponent " + std::to_string(edges[t]) + " out of range");
        if (t > 0 && edges[t] <= edges[t - 1])
            throw DomainError("edge exponents must be strictly increasing");
    }
}

// Exponent of the Theorem 3.5 factor: 2^m n - 2^{m-1} i_m - ... - 2 i_2 - i_1
// - 2^{m+1} + 2, with the first edge's coefficient overridable (the follow-up
// cubes' brackets use 2 j_1 instead of j_1).
std::int64_t factor_exponent(int n, std::span<const int> edges, std::int64_t first_coeff) {
    const int m = static_cast<int>(edges.size());
    std::int64_t e = (std::int64_t{1} << m) * n - (std::int64_t{1} << (m + 1)) + 2;
    for (int t = 0; t < m; ++t) {
        const std::int64_t coeff = (t == 0) ? first_coeff : (std::int64_t{1} << t);
        e -= coeff * edges[t];
    }
    return e;
}

// Index t = max{x : i_x <= bound}, 1-based; UnsupportedConfigError when empty.
std::int64_t max_index_at_most(std::span<const int> edges, int bound, const char* which) {
    std::int64_t t = 0;
    for (std::size_t x = 0; x < edges.size(); ++x)
        if (edges[x] <= bound) t = static_cast<std::int64_t>(x) + 1;
    if (t == 0)
        throw UnsupportedConfigError(std::string("side condition undefined: no edge of ") +
                                     which + " is <= the next cube's first edge");
    return t;
}

std::vector<std::vector<int>> canonical_profile(std::vector<std::vector<int>> profile) {
    std::sort(profile.begin(), profile.end());
    return profile;
}

std::vector<std::vector<int>> decomposition_profile(const CubeDecomposition& d) {
    std::vector<std::vector<int>> profile;
    profile.reserve(d.cubes.size());
    for (const Cube& c : d.cubes) profile.push_back(c.edges);
    return canonical_profile(std::move(profile));
}

std::uint64_t check_enumeration_budget(std::uint64_t positions, std::uint64_t weight,
                                       const SearchBudget& budget) {
    const std::uint64_t count = binomial_saturated(positions, weight);
    if (count > budget.max_patterns)
        throw BudgetExceededError("enumeration needs " + std::to_string(count) +
                                      " supports, budget is " +
                                      std::to_string(budget.max_patterns),
                                  count, static_cast<std::uint32_t>(weight));
    return count;
}

template <typename Pred>
std::uint64_t count_supports_word(int n, int weight, std::uint64_t count, int workers,
                                  Pred pred) {
    auto tallies = parallel_chunks<std::uint64_t>(
        0, count, workers, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t tally = 0;
            std::uint64_t mask = unrank_combination(1 << n, weight, lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                if (pred(mask)) ++tally;
                mask = gosper_next(mask);
            }
            return tally;
        });
    std::uint64_t total = 0;
    for (std::uint64_t t : tallies) total += t;
    return total;
}

std::vector<std::uint64_t> mask_positions(std::uint64_t mask) {
    std::vector<std::uint64_t> pos;
    pos.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        pos.push_back(static_cast<std::uint64_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return pos;
}

}  // namespace

std::string to_decimal(const BigCount& c) { return c.get_str(); }

BigCount count_cubes(int n, std::span<const int> edges) {
    check_edge_list(n, edges);
    return pow2_big(factor_exponent(n, edges, 1));
}

BigCount count_two_cube_sequences(const CountingSpec& spec) {
    if (spec.cube_edge_sets.size() != 2)
        throw DomainError("two-cube count needs exactly two edge sets");
    const auto& c1 = spec.cube_edge_sets[0];
    const auto& c2 = spec.cube_edge_sets[1];
    check_edge_list(spec.n, c1);
    check_edge_list(spec.n, c2);

    const std::int64_t t = max_index_at_most(c1, c2.front(), "C_1");
    if ((std::int64_t{1} << c2.front()) <= (std::int64_t{1} << t))
        throw UnsupportedConfigError("side condition 2^{j_1} > 2^t fails (j_1 = " +
                                     std::to_string(c2.front()) + ", t = " + std::to_string(t) +
                                     ")");
    BigCount result = count_cubes(spec.n, c1);
    result *= pow2_big(factor_exponent(spec.n, c2, 2));
    result *= (std::int64_t{1} << c2.front()) - (std::int64_t{1} << t);
    return result;
}

BigCount count_three_cube_sequences(const CountingSpec& spec) {
    if (spec.cube_edge_sets.size() != 3)
        throw DomainError("three-cube count needs exactly three edge sets");
    CountingSpec head{spec.n, {spec.cube_edge_sets[0], spec.cube_edge_sets[1]}};
    BigCount result = count_two_cube_sequences(head);

    const auto& c1 = spec.cube_edge_sets[0];
    const auto& c2 = spec.cube_edge_sets[1];
    const auto& c3 = spec.cube_edge_sets[2];
    check_edge_list(spec.n, c3);
    const std::int64_t u = max_index_at_most(c1, c3.front(), "C_1");
    const std::int64_t v = max_index_at_most(c2, c3.front(), "C_2");
    const std::int64_t occupied = (std::int64_t{1} << u) + (std::int64_t{1} << v);
    if ((std::int64_t{1} << c3.front()) <= occupied)
        throw UnsupportedConfigError("side condition 2^{k_1} > 2^u + 2^v fails (k_1 = " +
                                     std::to_string(c3.front()) + ", 2^u + 2^v = " +
                                     std::to_string(occupied) + ")");
    result *= pow2_big(factor_exponent(spec.n, c3, 2));
    result *= (std::int64_t{1} << c3.front()) - occupied;
    return result;
}

BigCount example35_count(int n) {
    if (n < 4) throw DomainError("the two-cube configuration needs n >= 4");
    if (n > PeriodicSequence::kMaxExponent) throw DomainError("period exponent out of range");
    return pow2_big(10 + std::int64_t{8} * (n - 4));
}

std::uint64_t count_sequences_with_profile(int n, const std::vector<std::vector<int>>& profile,
                                           const SearchBudget& budget, int workers) {
    if (profile.empty()) throw DomainError("profile must name at least one cube");
    std::uint64_t weight = 0;
    for (const auto& edges : profile) {
        check_edge_list(n, edges);
        weight += std::uint64_t{1} << edges.size();
    }
    const auto want = canonical_profile(profile);
    const std::uint64_t positions = std::uint64_t{1} << n;
    const std::uint64_t count = check_enumeration_budget(positions, weight, budget);
    if (workers <= 0) workers = default_workers();

    if (n <= 6) {
        return count_supports_word(n, static_cast<int>(weight), count, workers,
                                   [&](std::uint64_t mask) {
                                       const auto d = standard_decompose(
                                           PeriodicSequence::from_word(n, mask));
                                       return decomposition_profile(d) == want;
                                   });
    }
    // General periods: index-vector combinations, sequential (budget already caps the count).
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(weight));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::uint64_t tally = 0;
    while (true) {
        PeriodicSequence s(n);
        for (std::uint64_t i : idx) s.set_bit(i, true);
        if (decomposition_profile(standard_decompose(s)) == want) ++tally;
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] == positions - idx.size() + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return tally;
}

EnumerationResult verify_count_by_enumeration(const CountingSpec& spec,
                                              const SearchBudget& budget, int workers) {
    if (spec.cube_edge_sets.empty() || spec.cube_edge_sets.size() > 3)
        throw DomainError("counting spec must hold one, two, or three cubes");
    EnumerationResult result;
    if (spec.cube_edge_sets.size() == 1) {
        const auto& edges = spec.cube_edge_sets[0];
        result.predicted = count_cubes(spec.n, edges);
        const std::uint64_t weight = std::uint64_t{1} << edges.size();
        const std::uint64_t positions = std::uint64_t{1} << spec.n;
        const std::uint64_t count = check_enumeration_budget(positions, weight, budget);
        result.supports_scanned = count;
        if (workers <= 0) workers = default_workers();
        if (spec.n <= 6) {
            result.observed = count_supports_word(
                spec.n, static_cast<int>(weight), count, workers, [&](std::uint64_t mask) {
                    const auto cube = recognize_cube(SupportSet{spec.n, mask_positions(mask)});
                    return cube && cube->edges == edges;
                });
        } else {
            std::vector<std::uint64_t> idx(static_cast<std::size_t>(weight));
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::uint64_t tally = 0;
            while (true) {
                const auto cube = recognize_cube(SupportSet{spec.n, idx});
                if (cube && cube->edges == edges) ++tally;
                std::size_t i = idx.size();
                while (i > 0 && idx[i - 1] == positions - idx.size() + (i - 1)) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
            }
            result.observed = tally;
        }
        return result;
    }

    result.predicted = spec.cube_edge_sets.size() == 2 ? count_two_cube_sequences(spec)
                                                       : count_three_cube_sequences(spec);
    std::uint64_t weight = 0;
    for (const auto& edges : spec.cube_edge_sets) weight += std::uint64_t{1} << edges.size();
    result.supports_scanned =
        check_enumeration_budget(std::uint64_t{1} << spec.n, weight, budget);
    result.observed = count_sequences_with_profile(spec.n, spec.cube_edge_sets, budget, workers);
    return result;
}

QuadAuditReport quad_lc_audit(int n) {
    if (n < 1 || n > 4) throw DomainError("quad_lc_audit sweeps exhaustively; n must be in [1, 4]");
    QuadAuditReport report;
    report.n = n;
    const std::uint64_t period = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < period; ++a)
        for (std::uint64_t b = a + 1; b < period; ++b)
            for (std::uint64_t c = b + 1; c < period; ++c)
                for (std::uint64_t d = c + 1; d < period; ++d) {
                    const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                               (std::uint64_t{1} << c) | (std::uint64_t{1} << d);
                    const LinearComplexity oracle = detail::games_chan_word(mask, n);
                    const std::array<std::array<std::uint64_t, 4>, 3> pairings = {{
                        {a, b, c, d},  // (a,b) + (c,d)
                        {a, c, b, d},  // (a,c) + (b,d)
                        {a, d, b, c},  // (a,d) + (b,c)
                    }};
                    for (const auto& p : pairings) {
                        if ((p[2] - p[0]) % 2 == 0) {
                            ++report.inadmissible;
                            continue;
                        }
                        const LinearComplexity predicted =
                            quad_lc_predictor(p[0], p[1], p[2], p[3], n);
                        ++report.cases_examined;
                        if (predicted == oracle) {
                            ++report.agreements;
                        } else {
                            ++report.disagreements;
                            report.witnesses.push_back(
                                QuadAuditWitness{{a, b, c, d}, p, predicted, oracle});
                        }
                    }
                }
    return report;
}

}  // namespace seqcube
