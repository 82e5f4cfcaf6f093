#pragma once

#include <cstdint>
#include <vector>

#include "seqcube/bitseq.hpp"
#include "seqcube/cube.hpp"
#include "seqcube/linear_complexity.hpp"

namespace seqcube {

/// Caps on exhaustive error-pattern search. Checked lazily, one weight class
/// at a time, so searches that finish early never trip the caps.
struct SearchBudget {
    std::uint64_t max_patterns = std::uint64_t{1} << 26;
    std::uint32_t max_weight = 8;
};

struct SearchStats {
    std::uint64_t patterns_examined = 0;
};

struct SpectrumPoint {
    std::uint64_t k = 0;
    LinearComplexity complexity = 0;
    friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
};

/// Critical points of the k-error linear complexity: strictly increasing k,
/// strictly decreasing complexity, first point (0, L(s)).
struct Spectrum {
    std::vector<SpectrumPoint> points;
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Exact k-error linear complexity: min over all error patterns of weight
/// <= k of games_chan_lc(s ^ e). Enumerates ascending by weight; stops early
/// once the incumbent cannot improve (0, or 1 while k < weight(s)).
/// Requires 0 <= k <= 2^n. Throws BudgetExceededError naming what was needed.
LinearComplexity klc_exhaustive(const PeriodicSequence& s, std::uint64_t k,
                                const SearchBudget& budget = {}, SearchStats* stats = nullptr,
                                int workers = 0);

/// Smallest k at which L_k drops below L(s): 2^{W_H(2^n - L(s))}.
/// Requires L(s) > 0 (zero sequence has nothing to decrease).
std::uint64_t kmin_first_decrease(const PeriodicSequence& s);

/// True iff klc_exhaustive(s, k) == games_chan_lc(s). Cross-checked against
/// k < kmin_first_decrease(s); disagreement raises InternalCheckError.
bool is_stable_klc(const PeriodicSequence& s, std::uint64_t k, const SearchBudget& budget = {},
                   SearchStats* stats = nullptr, int workers = 0);

/// Full critical-point spectrum, sweeping k from 0 to weight(s).
Spectrum celcs(const PeriodicSequence& s, const SearchBudget& budget = {},
               SearchStats* stats = nullptr, int workers = 0);

/// Maximum k-error linear complexity over all 2^n-periodic sequences:
/// 2^n - (2^l - 1) with 2^{l-1} <= k < 2^l; k = 0 -> 2^n. Requires k < 2^n.
LinearComplexity max_klc(int n, std::uint64_t k);

/// Predicted decrease points: prefix sums of 2^{m_i} with cubes taken in
/// descending order of linear complexity. Requires >= 1 cube and no lone
/// vertex (even weight).
std::vector<std::uint64_t> predict_critical_ks(const CubeDecomposition& d);

enum class ScanFilter { prop32_unique, all_even_weight };

struct ScanWitness {
    std::vector<std::uint64_t> support;
    CubeDecomposition decomposition;
    std::vector<std::uint64_t> predicted_ks;
    Spectrum spectrum;
};

struct ScanReport {
    int n = 0;
    ScanFilter filter = ScanFilter::prop32_unique;
    std::uint64_t matched = 0;
    std::uint64_t mismatched = 0;
    std::uint64_t skipped = 0;
    std::uint64_t budget_blocked = 0;  // sequences the budget could not settle
    bool complete = true;
    std::uint64_t patterns_examined = 0;
    std::vector<ScanWitness> witnesses;  // every MISMATCH, in sequence order
};

/// Sweeps every 2^n-periodic sequence (n <= 4): odd-weight, zero, and
/// filtered-out sequences are SKIPPED; for the rest the predicted decrease
/// points are compared with the oracle spectrum's critical ks (k > 0 only --
/// the prediction speaks to where decreases happen, not their magnitudes).
/// Data-parallel over contiguous sequence ranges with deterministic merge.
ScanReport conjecture_scan(int n, ScanFilter filter, const SearchBudget& budget = {},
                           int workers = 0);

}  // namespace seqcube
