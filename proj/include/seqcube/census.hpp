#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqcube/error_complexity.hpp"
#include "seqcube/linear_complexity.hpp"

namespace seqcube {

/// Exact arbitrary-precision count. No floating point anywhere in this module.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& c);

/// Edge-exponent configuration for one, two, or three cubes (C_1, C_2, C_3 order).
struct CountingSpec {
    int n = 0;
    std::vector<std::vector<int>> cube_edge_sets;
};

/// Number of m-cubes with edges {i_1 < ... < i_m} in period 2^n:
/// 2^{2^m n - 2^{m-1} i_m - ... - 2 i_2 - i_1 - 2^{m+1} + 2}.
BigCount count_cubes(int n, std::span<const int> edges);

/// Two-cube sequence count. Requires the side condition 2^{j_1} > 2^t with
/// t = max{x : i_x <= j_1}; otherwise UnsupportedConfigError.
BigCount count_two_cube_sequences(const CountingSpec& spec);

/// Three-cube sequence count. Requires 2^{j_1} > 2^t and 2^{k_1} > 2^u + 2^v.
BigCount count_three_cube_sequences(const CountingSpec& spec);

/// Ad-hoc count for the configuration C_1 = {0,1}, C_2 = {0,3} (which sits
/// outside the two-cube side condition): 2^10 * 2^{8(n-4)}. Requires n >= 4.
BigCount example35_count(int n);

struct EnumerationResult {
    BigCount predicted;
    BigCount observed;
    std::uint64_t supports_scanned = 0;
};

/// Brute-force cross-check. Single cube: scans all supports of size 2^m and
/// counts those recognize_cube accepts with exactly the given edges.
/// Multi-cube: scans all supports of the combined weight and counts those
/// whose standard decomposition has exactly the given edge-set profile
/// (order-free multiset). Returns predicted and observed without asserting
/// equality. Data-parallel with deterministic merge.
EnumerationResult verify_count_by_enumeration(const CountingSpec& spec,
                                              const SearchBudget& budget = {}, int workers = 0);

/// Observed count of sequences whose standard decomposition profile equals
/// the given multiset of edge sets (combined weight = sum of 2^{m_i}).
std::uint64_t count_sequences_with_profile(int n, const std::vector<std::vector<int>>& profile,
                                           const SearchBudget& budget = {}, int workers = 0);

struct QuadAuditWitness {
    std::array<std::uint64_t, 4> support{};  // ascending
    std::array<std::uint64_t, 4> pairing{};  // i, j, k, l
    LinearComplexity predicted = 0;
    LinearComplexity oracle = 0;
};

struct QuadAuditReport {
    int n = 0;
    std::uint64_t cases_examined = 0;
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t inadmissible = 0;  // pairings failing the hypotheses, not counted as cases
    std::vector<QuadAuditWitness> witnesses;
};

/// Compares quad_lc_predictor with games_chan_lc over every 4-element support
/// and every pairing satisfying the predictor's hypotheses. Requires n <= 4.
QuadAuditReport quad_lc_audit(int n);

}  // namespace seqcube
