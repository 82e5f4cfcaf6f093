#include "seqcube/error_complexity.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "seqcube/combinatorics.hpp"
#include "seqcube/errors.hpp"
#include "seqcube/parallel.hpp"

namespace seqcube {

namespace {

constexpr std::uint64_t kParallelClassThreshold = std::uint64_t{1} << 16;

std::uint64_t patterns_through_weight(std::uint64_t positions, std::uint64_t max_w) {
    std::uint64_t total = 0;
    for (std::uint64_t w = 1; w <= max_w; ++w) {
        const std::uint64_t c = binomial_saturated(positions, w);
        if (c == ~std::uint64_t{0} || total > ~std::uint64_t{0} - c) return ~std::uint64_t{0};
        total += c;
    }
    return total;
}

void check_class_budget(std::uint64_t positions, std::uint64_t sweep_end, std::uint64_t w,
                        std::uint64_t class_count, const SearchBudget& budget,
                        const SearchStats& stats) {
    if (w > budget.max_weight)
        throw BudgetExceededError(
            "error weight " + std::to_string(w) + " exceeds budget max_weight " +
                std::to_string(budget.max_weight) + " (full sweep needs " +
                std::to_string(patterns_through_weight(positions, sweep_end)) + " patterns)",
            patterns_through_weight(positions, sweep_end), static_cast<std::uint32_t>(w));
    if (class_count > budget.max_patterns - std::min(budget.max_patterns, stats.patterns_examined))
        throw BudgetExceededError(
            "pattern budget exceeded: full sweep needs " +
                std::to_string(patterns_through_weight(positions, sweep_end)) +
                " patterns, budget is " + std::to_string(budget.max_patterns),
            patterns_through_weight(positions, sweep_end), static_cast<std::uint32_t>(w));
}

// Minimum LC of s ^ e over all weight-w patterns e; period <= 64 bits.
LinearComplexity class_min_word(std::uint64_t sword, int n, int w, std::uint64_t count,
                                int workers) {
    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) {
        LinearComplexity best = ~LinearComplexity{0};
        std::uint64_t mask = unrank_combination(1 << n, w, lo);
        for (std::uint64_t r = lo; r < hi; ++r) {
            best = std::min(best, detail::games_chan_word(sword ^ mask, n));
            mask = gosper_next(mask);
        }
        return best;
    };
    if (workers > 1 && count >= kParallelClassThreshold) {
        auto mins = parallel_chunks<LinearComplexity>(
            0, count, workers,
            [&](std::size_t, std::uint64_t lo, std::uint64_t hi) { return scan_range(lo, hi); });
        return *std::min_element(mins.begin(), mins.end());
    }
    return scan_range(0, count);
}

// General-period fallback: index-vector combinations, flipping bits in place.
LinearComplexity class_min_general(const PeriodicSequence& s, std::uint64_t w) {
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(w));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const std::uint64_t positions = s.period();
    PeriodicSequence t = s;
    LinearComplexity best = ~LinearComplexity{0};
    while (true) {
        for (std::uint64_t i : idx) t.flip_bit(i);
        best = std::min(best, games_chan_lc(t));
        for (std::uint64_t i : idx) t.flip_bit(i);
        // next combination in lexicographic index order
        std::size_t i = idx.size();
        while (i > 0 && idx[i - 1] == positions - idx.size() + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

LinearComplexity class_min(const PeriodicSequence& s, std::uint64_t w, std::uint64_t count,
                           int workers) {
    if (s.exponent() <= 6)
        return class_min_word(s.as_word(), s.exponent(), static_cast<int>(w), count, workers);
    return class_min_general(s, w);
}

void validate_spectrum(const Spectrum& sp, std::uint64_t weight) {
    if (sp.points.empty() || sp.points.front().k != 0)
        throw InternalCheckError("spectrum must start at k = 0");
    for (std::size_t i = 1; i < sp.points.size(); ++i) {
        if (sp.points[i].k <= sp.points[i - 1].k ||
            sp.points[i].complexity >= sp.points[i - 1].complexity)
            throw InternalCheckError("spectrum points must decrease strictly");
    }
    if (sp.points.back().complexity != 0 || sp.points.back().k != weight)
        throw InternalCheckError("spectrum must end at (weight, 0)");
}

}  // namespace

LinearComplexity klc_exhaustive(const PeriodicSequence& s, std::uint64_t k,
                                const SearchBudget& budget, SearchStats* stats, int workers) {
    if (k > s.period()) throw DomainError("k exceeds the period");
    const LinearComplexity base = games_chan_lc(s);
    if (k == 0) return base;
    const std::uint64_t weight = s.weight();
    if (k >= weight) return 0;  // erasing the support reaches the zero sequence

    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    if (workers <= 0) workers = default_workers();
    LinearComplexity incumbent = base;
    for (std::uint64_t w = 1; w <= k; ++w) {
        // Floor: LC 0 needs exactly `weight` flips, so nothing below 1 is
        // reachable here and an incumbent of 1 cannot improve.
        if (incumbent <= 1) break;
        const std::uint64_t count = binomial_saturated(s.period(), w);
        check_class_budget(s.period(), k, w, count, budget, st);
        incumbent = std::min(incumbent, class_min(s, w, count, workers));
        st.patterns_examined += count;
    }
    return incumbent;
}

std::uint64_t kmin_first_decrease(const PeriodicSequence& s) {
    const LinearComplexity lc = games_chan_lc(s);
    if (lc == 0) throw DomainError("the zero sequence has no complexity to decrease");
    const int ones = std::popcount(s.period() - lc);
    return std::uint64_t{1} << ones;
}

bool is_stable_klc(const PeriodicSequence& s, std::uint64_t k, const SearchBudget& budget,
                   SearchStats* stats, int workers) {
    const LinearComplexity base = games_chan_lc(s);
    const bool stable = klc_exhaustive(s, k, budget, stats, workers) == base;
    if (base > 0) {
        const bool predicted = k < kmin_first_decrease(s);
        if (predicted != stable)
            throw InternalCheckError("stability disagrees with the first-decrease law");
    }
    return stable;
}

Spectrum celcs(const PeriodicSequence& s, const SearchBudget& budget, SearchStats* stats,
               int workers) {
    Spectrum sp;
    const LinearComplexity base = games_chan_lc(s);
    sp.points.push_back({0, base});
    const std::uint64_t weight = s.weight();
    if (weight == 0) return sp;

    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    if (workers <= 0) workers = default_workers();
    LinearComplexity incumbent = base;
    for (std::uint64_t w = 1; w < weight && incumbent > 1; ++w) {
        const std::uint64_t count = binomial_saturated(s.period(), w);
        check_class_budget(s.period(), weight - 1, w, count, budget, st);
        const LinearComplexity m = class_min(s, w, count, workers);
        st.patterns_examined += count;
        if (m < incumbent) {
            incumbent = m;
            sp.points.push_back({w, m});
        }
    }
    sp.points.push_back({weight, 0});
    validate_spectrum(sp, weight);
    return sp;
}

LinearComplexity max_klc(int n, std::uint64_t k) {
    if (n < 1 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range");
    const std::uint64_t period = std::uint64_t{1} << n;
    if (k >= period) throw DomainError("k must be below the period");
    if (k == 0) return period;
    const int l = std::bit_width(k);
    return period - ((std::uint64_t{1} << l) - 1);
}

std::vector<std::uint64_t> predict_critical_ks(const CubeDecomposition& d) {
    if (d.lone_vertex)
        throw DomainError("prediction requires even weight (no lone vertex)");
    if (d.cubes.empty()) throw DomainError("prediction requires at least one cube");
    std::vector<std::uint64_t> ks;
    ks.reserve(d.cubes.size());
    std::uint64_t acc = 0;
    for (auto it = d.cubes.rbegin(); it != d.cubes.rend(); ++it) {  // descending LC
        acc += std::uint64_t{1} << it->dimension();
        ks.push_back(acc);
    }
    return ks;
}

ScanReport conjecture_scan(int n, ScanFilter filter, const SearchBudget& budget, int workers) {
    if (n < 1 || n > 4)
        throw DomainError("conjecture_scan sweeps the full sequence space; n must be in [1, 4]");
    const std::uint64_t period = std::uint64_t{1} << n;
    const std::uint64_t total = std::uint64_t{1} << period;
    if (workers <= 0) workers = default_workers();

    auto partials = parallel_chunks<ScanReport>(
        0, total, workers, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
            ScanReport r;
            r.n = n;
            r.filter = filter;
            for (std::uint64_t word = lo; word < hi; ++word) {
                if (word == 0 || std::popcount(word) % 2 != 0) {
                    ++r.skipped;
                    continue;
                }
                const PeriodicSequence s = PeriodicSequence::from_word(n, word);
                CubeDecomposition d = standard_decompose(s);
                if (filter == ScanFilter::prop32_unique && !detail::prop32_condition(d)) {
                    ++r.skipped;
                    continue;
                }
                std::vector<std::uint64_t> predicted = predict_critical_ks(d);
                Spectrum sp;
                SearchStats st;
                try {
                    sp = celcs(s, budget, &st, 1);
                } catch (const BudgetExceededError&) {
                    ++r.budget_blocked;
                    r.complete = false;
                    r.patterns_examined += st.patterns_examined;
                    continue;
                }
                r.patterns_examined += st.patterns_examined;
                std::vector<std::uint64_t> oracle_ks;
                for (const SpectrumPoint& pt : sp.points)
                    if (pt.k > 0) oracle_ks.push_back(pt.k);
                if (oracle_ks == predicted) {
                    ++r.matched;
                } else {
                    ++r.mismatched;
                    r.witnesses.push_back(ScanWitness{support_of(s).positions, std::move(d),
                                                      std::move(predicted), std::move(sp)});
                }
            }
            return r;
        });

    ScanReport out;
    out.n = n;
    out.filter = filter;
    for (ScanReport& p : partials) {
        out.matched += p.matched;
        out.mismatched += p.mismatched;
        out.skipped += p.skipped;
        out.budget_blocked += p.budget_blocked;
        out.patterns_examined += p.patterns_examined;
        out.complete = out.complete && p.complete;
        for (ScanWitness& w : p.witnesses) out.witnesses.push_back(std::move(w));
    }
    return out;
}

}  // namespace seqcube
