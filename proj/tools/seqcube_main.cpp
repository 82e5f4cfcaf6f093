// seqcube: command-line surface for 2^n-periodic binary sequence analysis.
//
// Exit codes: 0 success, 2 parse error, 3 semantic/range error,
// 4 budget exceeded, 5 internal cross-check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "seqcube/bitseq.hpp"
#include "seqcube/census.hpp"
#include "seqcube/combinatorics.hpp"
#include "seqcube/cube.hpp"
#include "seqcube/error_complexity.hpp"
#include "seqcube/errors.hpp"
#include "seqcube/linear_complexity.hpp"
#include "seqcube/parallel.hpp"

using nlohmann::ordered_json;
using namespace seqcube;

namespace {

// Periods up to this many bits are echoed as a bits string in documents.
constexpr std::uint64_t kMaxEchoBits = 4096;

// The factor-multiplicity oracle is quadratic at worst; run it automatically
// only at desk scale, or on request via --verify.
constexpr std::uint64_t kAutoOracleCheckPeriod = std::uint64_t{1} << 16;

struct GlobalOpts {
    bool json = false;
    bool timing = false;
    std::uint64_t budget_patterns = SearchBudget{}.max_patterns;
    std::uint32_t budget_weight = SearchBudget{}.max_weight;
    int workers = 0;

    SearchBudget budget() const { return SearchBudget{budget_patterns, budget_weight}; }
};

struct SeqInput {
    std::string bits;
    std::string hex;
    std::string positions;
    int n = -1;
    bool positions_given = false;
};

PeriodicSequence parse_input(const SeqInput& in, ordered_json& echo) {
    int forms = 0;
    if (!in.bits.empty()) ++forms;
    if (!in.hex.empty()) ++forms;
    if (in.positions_given) ++forms;
    if (forms != 1)
        throw ParseError("exactly one of --bits, --hex, --positions is required");

    if (!in.bits.empty()) {
        const std::size_t len = in.bits.size();
        if (len < 2 || (len & (len - 1)) != 0)
            throw ParseError("--bits length must be a power of two >= 2");
        int n = 0;
        while ((std::size_t{1} << n) < len) ++n;
        echo = {{"form", "bits"}, {"text", in.bits}, {"n", n}};
        return parse_sequence(in.bits, SequenceFormat::bits, n);
    }
    if (in.n < 0) throw ParseError("--n is required with --hex or --positions");
    if (!in.hex.empty()) {
        echo = {{"form", "hex"}, {"text", in.hex}, {"n", in.n}};
        return parse_sequence(in.hex, SequenceFormat::hex, in.n);
    }
    echo = {{"form", "positions"}, {"text", in.positions}, {"n", in.n}};
    return parse_sequence(in.positions, SequenceFormat::positions, in.n);
}

void add_seq_options(CLI::App* cmd, SeqInput& in) {
    cmd->add_option("--bits", in.bits, "sequence as a 01-string (length fixes n)");
    cmd->add_option("--hex", in.hex, "sequence as hex, index 4t at the MSB of char t");
    cmd->add_option("--positions", in.positions, "comma-separated support positions")
        ->expected(0, 1)
        ->trigger_on_parse()
        ->each([&in](const std::string&) { in.positions_given = true; });
    cmd->add_option("--n", in.n, "period exponent (period 2^n)");
}

std::vector<int> parse_int_csv(const std::string& text, const char* what) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        const std::string tok = text.substr(i, j - i);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " entry: '" + tok + "'");
        }
        i = j + 1;
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what + " list");
    return out;
}

std::vector<std::uint64_t> parse_u64_csv(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    for (int v : parse_int_csv(text, what)) out.push_back(static_cast<std::uint64_t>(v));
    return out;
}

ordered_json cube_json(const Cube& c) {
    return {{"vertices", c.vertices},
            {"edges", c.edges},
            {"anchor", c.anchor()},
            {"dimension", c.dimension()},
            {"lc", c.lc()}};
}

ordered_json spectrum_json(const Spectrum& sp) {
    ordered_json points = ordered_json::array();
    for (const SpectrumPoint& p : sp.points) points.push_back({p.k, p.complexity});
    return points;
}

ordered_json decomposition_json(const CubeDecomposition& d) {
    ordered_json cubes = ordered_json::array();
    for (const Cube& c : d.cubes) cubes.push_back(cube_json(c));
    ordered_json out = {{"cubes", cubes}};
    out["lone_vertex"] = d.lone_vertex ? ordered_json(*d.lone_vertex) : ordered_json(nullptr);
    return out;
}

std::string spectrum_text(const Spectrum& sp) {
    std::string out;
    for (const SpectrumPoint& p : sp.points) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(p.k) + "," + std::to_string(p.complexity) + ")";
    }
    return out;
}

std::string edges_text(const std::vector<int>& edges) {
    std::string out = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(edges[i]);
    }
    return out + "}";
}

std::string vertices_text(const std::vector<std::uint64_t>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

class DocumentPrinter {
public:
    DocumentPrinter(const GlobalOpts& opts, std::string command, ordered_json input)
        : opts_(opts),
          command_(std::move(command)),
          input_(std::move(input)),
          start_(std::chrono::steady_clock::now()) {}

    void finish(ordered_json result, const SearchStats& stats, const std::string& human) {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
        if (opts_.json) {
            ordered_json doc;
            doc["command"] = command_;
            doc["input"] = input_;
            doc["result"] = std::move(result);
            doc["budget"] = {{"max_patterns", opts_.budget_patterns},
                             {"max_weight", opts_.budget_weight},
                             {"patterns_examined", stats.patterns_examined}};
            doc["timing_ms"] = opts_.timing ? ordered_json(ms) : ordered_json(nullptr);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << human;
            if (opts_.timing) std::printf("time: %.2f ms\n", ms);
        }
    }

private:
    const GlobalOpts& opts_;
    std::string command_;
    ordered_json input_;
    std::chrono::steady_clock::time_point start_;
};

// ---- command handlers -----------------------------------------------------

int run_lc(const GlobalOpts& opts, const SeqInput& in, bool verify) {
    ordered_json echo;
    const PeriodicSequence s = parse_input(in, echo);
    DocumentPrinter doc(opts, "lc", echo);

    const LinearComplexity lc = games_chan_lc(s);
    const bool check = verify || s.period() <= kAutoOracleCheckPeriod;
    bool agrees = true;
    if (check) {
        const LinearComplexity oracle = lc_by_factor_multiplicity(s);
        agrees = oracle == lc;
        if (!agrees)
            throw InternalCheckError("games_chan_lc = " + std::to_string(lc) +
                                     " but factor multiplicity gives " + std::to_string(oracle));
    }
    ordered_json result = {{"l", lc},
                           {"oracle_checked", check},
                           {"oracle_agrees", check ? ordered_json(agrees) : ordered_json(nullptr)}};
    doc.finish(result, SearchStats{},
               "L = " + std::to_string(lc) +
                   (check ? " (oracle check: ok)\n" : " (oracle check: skipped)\n"));
    return 0;
}

int run_klc(const GlobalOpts& opts, const SeqInput& in, std::uint64_t k) {
    ordered_json echo;
    const PeriodicSequence s = parse_input(in, echo);
    DocumentPrinter doc(opts, "klc", echo);

    SearchStats stats;
    const LinearComplexity lc = games_chan_lc(s);
    const LinearComplexity lk = klc_exhaustive(s, k, opts.budget(), &stats, opts.workers);
    const bool stable = lk == lc;
    ordered_json result = {{"k", k}, {"klc", lk}, {"stable", stable}, {"l", lc}};
    result["k_min"] = lc > 0 ? ordered_json(kmin_first_decrease(s)) : ordered_json(nullptr);
    std::string human = "L_" + std::to_string(k) + " = " + std::to_string(lk) +
                        (stable ? " (stable" : " (unstable") + ", L = " + std::to_string(lc);
    if (lc > 0) human += ", k_min = " + std::to_string(kmin_first_decrease(s));
    doc.finish(result, stats, human + ")\n");
    return 0;
}

int run_kmin(const GlobalOpts& opts, const SeqInput& in) {
    ordered_json echo;
    const PeriodicSequence s = parse_input(in, echo);
    DocumentPrinter doc(opts, "kmin", echo);
    const LinearComplexity lc = games_chan_lc(s);
    const std::uint64_t kmin = kmin_first_decrease(s);
    doc.finish({{"k_min", kmin}, {"l", lc}}, SearchStats{},
               "k_min = " + std::to_string(kmin) + " (L = " + std::to_string(lc) + ")\n");
    return 0;
}

int run_spectrum(const GlobalOpts& opts, const SeqInput& in) {
    ordered_json echo;
    const PeriodicSequence s = parse_input(in, echo);
    DocumentPrinter doc(opts, "spectrum", echo);
    SearchStats stats;
    const Spectrum sp = celcs(s, opts.budget(), &stats, opts.workers);
    ordered_json result = {{"points", spectrum_json(sp)}, {"weight", s.weight()}};
    doc.finish(result, stats, "critical points: " + spectrum_text(sp) + "\n");
    return 0;
}

int run_decompose(const GlobalOpts& opts, const SeqInput& in) {
    ordered_json echo;
    const PeriodicSequence s = parse_input(in, echo);
    DocumentPrinter doc(opts, "decompose", echo);
    const CubeDecomposition d = standard_decompose(s);
    ordered_json result = decomposition_json(d);
    result["l"] = games_chan_lc(s);
    std::string human;
    for (std::size_t i = 0; i < d.cubes.size(); ++i) {
        const Cube& c = d.cubes[i];
        human += "cube " + std::to_string(i + 1) + ": vertices " + vertices_text(c.vertices) +
                 " edges " + edges_text(c.edges) + " lc " + std::to_string(c.lc()) + "\n";
    }
    if (d.lone_vertex) human += "lone vertex: " + std::to_string(*d.lone_vertex) + "\n";
    if (d.cubes.empty() && !d.lone_vertex) human += "empty decomposition (zero sequence)\n";
    doc.finish(result, SearchStats{}, human);
    return 0;
}

int run_recognize(const GlobalOpts& opts, const SeqInput& in) {
    ordered_json echo;
    const PeriodicSequence s = parse_input(in, echo);
    DocumentPrinter doc(opts, "recognize", echo);
    const auto cube = recognize_cube(support_of(s));
    ordered_json result = {{"is_cube", cube.has_value()}};
    result["cube"] = cube ? cube_json(*cube) : ordered_json(nullptr);
    doc.finish(result, SearchStats{},
               cube ? "cube with edges " + edges_text(cube->edges) + ", lc " +
                          std::to_string(cube->lc()) + "\n"
                    : "not a cube\n");
    return 0;
}

int run_construct(const GlobalOpts& opts, int n, const std::string& edges_csv,
                  std::uint64_t anchor, const std::string& offsets_csv) {
    const std::vector<int> edges = parse_int_csv(edges_csv, "edge");
    const std::vector<std::uint64_t> offsets = parse_u64_csv(offsets_csv, "offset");
    DocumentPrinter doc(opts, "construct",
                        {{"n", n}, {"edges", edges}, {"anchor", anchor}, {"offsets", offsets}});
    const Cube c = construct_cube(n, edges, anchor, offsets);
    ordered_json result = {{"cube", cube_json(c)}};
    result["bits"] = c.n <= 12 && (std::uint64_t{1} << c.n) <= kMaxEchoBits
                         ? ordered_json(to_bits_string(materialize(c)))
                         : ordered_json(nullptr);
    doc.finish(result, SearchStats{},
               "vertices " + vertices_text(c.vertices) + " edges " + edges_text(c.edges) +
                   " lc " + std::to_string(c.lc()) + "\n");
    return 0;
}

int run_maxklc(const GlobalOpts& opts, int n, std::uint64_t k) {
    DocumentPrinter doc(opts, "maxklc", {{"n", n}, {"k", k}});
    const LinearComplexity value = max_klc(n, k);
    doc.finish({{"max_klc", value}}, SearchStats{},
               "max L_" + std::to_string(k) + " = " + std::to_string(value) + " over period " +
                   std::to_string(std::uint64_t{1} << n) + "\n");
    return 0;
}

int run_census(const GlobalOpts& opts, int n, const std::vector<std::string>& cube_csvs,
               bool example35, bool verify) {
    if (example35 && !cube_csvs.empty())
        throw ParseError("--example35 cannot be combined with --cube/--edges");
    if (!example35 && cube_csvs.empty())
        throw ParseError("census needs --edges, --cube (up to three), or --example35");

    SearchStats stats;
    ordered_json input = {{"n", n}};
    ordered_json result;
    std::string human;
    if (example35) {
        input["config"] = "example35";
        const BigCount predicted = example35_count(n);
        result["predicted"] = to_decimal(predicted);
        human = "predicted " + to_decimal(predicted) + "\n";
        if (verify) {
            const std::vector<std::vector<int>> profile = {{0, 1}, {0, 3}};
            std::uint64_t weight = 0;
            for (const auto& edges : profile) weight += std::uint64_t{1} << edges.size();
            const std::uint64_t observed =
                count_sequences_with_profile(n, profile, opts.budget(), opts.workers);
            stats.patterns_examined = binomial_saturated(std::uint64_t{1} << n, weight);
            result["observed"] = std::to_string(observed);
            result["equal"] = BigCount(static_cast<unsigned long>(observed)) == predicted;
            human += "observed " + std::to_string(observed) +
                     (result["equal"].get<bool>() ? " (equal)\n" : " (NOT equal)\n");
        } else {
            result["observed"] = nullptr;
            result["equal"] = nullptr;
        }
        DocumentPrinter doc(opts, "census", input);
        doc.finish(result, stats, human);
        return 0;
    }

    CountingSpec spec;
    spec.n = n;
    for (const std::string& csv : cube_csvs)
        spec.cube_edge_sets.push_back(parse_int_csv(csv, "edge"));
    if (spec.cube_edge_sets.size() > 3)
        throw ParseError("census supports at most three cubes");
    input["cubes"] = spec.cube_edge_sets;
    DocumentPrinter doc(opts, "census", input);

    if (verify) {
        const EnumerationResult r =
            verify_count_by_enumeration(spec, opts.budget(), opts.workers);
        stats.patterns_examined = r.supports_scanned;
        result["predicted"] = to_decimal(r.predicted);
        result["observed"] = to_decimal(r.observed);
        result["equal"] = r.predicted == r.observed;
        result["supports_scanned"] = r.supports_scanned;
        human = "predicted " + to_decimal(r.predicted) + "\nobserved " + to_decimal(r.observed) +
                (r.predicted == r.observed ? " (equal)\n" : " (NOT equal)\n");
    } else {
        BigCount predicted;
        if (spec.cube_edge_sets.size() == 1)
            predicted = count_cubes(n, spec.cube_edge_sets[0]);
        else if (spec.cube_edge_sets.size() == 2)
            predicted = count_two_cube_sequences(spec);
        else
            predicted = count_three_cube_sequences(spec);
        result["predicted"] = to_decimal(predicted);
        result["observed"] = nullptr;
        result["equal"] = nullptr;
        human = "predicted " + to_decimal(predicted) + "\n";
    }
    doc.finish(result, stats, human);
    return 0;
}

int run_quad_audit(const GlobalOpts& opts, int n) {
    DocumentPrinter doc(opts, "quad-audit", {{"n", n}});
    const QuadAuditReport report = quad_lc_audit(n);
    ordered_json witnesses = ordered_json::array();
    for (const QuadAuditWitness& w : report.witnesses)
        witnesses.push_back({{"support", w.support},
                             {"pairing", w.pairing},
                             {"predicted", w.predicted},
                             {"oracle", w.oracle}});
    ordered_json result = {{"cases_examined", report.cases_examined},
                           {"agreements", report.agreements},
                           {"disagreements", report.disagreements},
                           {"inadmissible", report.inadmissible},
                           {"witnesses", witnesses}};
    std::string human = "cases " + std::to_string(report.cases_examined) + ", agreements " +
                        std::to_string(report.agreements) + ", disagreements " +
                        std::to_string(report.disagreements) + "\n";
    for (std::size_t i = 0; i < report.witnesses.size() && i < 5; ++i) {
        const QuadAuditWitness& w = report.witnesses[i];
        human += "  witness: support {" + std::to_string(w.support[0]) + "," +
                 std::to_string(w.support[1]) + "," + std::to_string(w.support[2]) + "," +
                 std::to_string(w.support[3]) + "} pairing (" + std::to_string(w.pairing[0]) +
                 "," + std::to_string(w.pairing[1]) + ")+(" + std::to_string(w.pairing[2]) + "," +
                 std::to_string(w.pairing[3]) + ") predictor " + std::to_string(w.predicted) +
                 " oracle " + std::to_string(w.oracle) + "\n";
    }
    if (report.witnesses.size() > 5)
        human += "  ... " + std::to_string(report.witnesses.size() - 5) + " more (see --json)\n";
    doc.finish(result, SearchStats{}, human);
    return 0;
}

int run_scan(const GlobalOpts& opts, int n, const std::string& filter_name) {
    ScanFilter filter;
    if (filter_name == "prop32_unique")
        filter = ScanFilter::prop32_unique;
    else if (filter_name == "all_even_weight")
        filter = ScanFilter::all_even_weight;
    else
        throw ParseError("unknown filter '" + filter_name +
                         "' (expected prop32_unique or all_even_weight)");
    DocumentPrinter doc(opts, "scan", {{"n", n}, {"filter", filter_name}});

    const ScanReport report = conjecture_scan(n, filter, opts.budget(), opts.workers);
    SearchStats stats{report.patterns_examined};
    ordered_json witnesses = ordered_json::array();
    for (const ScanWitness& w : report.witnesses) {
        ordered_json entry = {{"support", w.support}};
        entry["decomposition"] = decomposition_json(w.decomposition);
        entry["predicted_ks"] = w.predicted_ks;
        entry["spectrum"] = spectrum_json(w.spectrum);
        witnesses.push_back(std::move(entry));
    }
    ordered_json result = {{"matched", report.matched},
                           {"mismatched", report.mismatched},
                           {"skipped", report.skipped},
                           {"budget_blocked", report.budget_blocked},
                           {"complete", report.complete},
                           {"witnesses", witnesses}};
    std::string human = "matched " + std::to_string(report.matched) + ", mismatched " +
                        std::to_string(report.mismatched) + ", skipped " +
                        std::to_string(report.skipped) +
                        (report.complete ? "" : ", INCOMPLETE (budget)") + "\n";
    for (std::size_t i = 0; i < report.witnesses.size() && i < 5; ++i) {
        const ScanWitness& w = report.witnesses[i];
        human += "  mismatch: support " + vertices_text(w.support) + " predicted [";
        for (std::size_t j = 0; j < w.predicted_ks.size(); ++j)
            human += (j ? "," : "") + std::to_string(w.predicted_ks[j]);
        human += "] spectrum " + spectrum_text(w.spectrum) + "\n";
    }
    if (report.witnesses.size() > 5)
        human += "  ... " + std::to_string(report.witnesses.size() - 5) + " more (see --json)\n";
    doc.finish(result, stats, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seqcube: linear complexity, k-error complexity, and cube analysis of "
                 "2^n-periodic binary sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit one machine-readable JSON document");
    app.add_flag("--timing", opts.timing, "include timing in the output");
    app.add_option("--budget-patterns", opts.budget_patterns, "max error patterns to examine");
    app.add_option("--budget-weight", opts.budget_weight, "max error weight to examine");
    app.add_option("--workers", opts.workers,
                   "worker threads (0 = auto, env SEQCUBE_WORKERS honored)");

    SeqInput lc_in, klc_in, kmin_in, spec_in, dec_in, rec_in;
    bool lc_verify = false;
    std::uint64_t klc_k = 0;
    int construct_n = 0, maxklc_n = 0, census_n = 0, audit_n = 0, scan_n = 0;
    std::string construct_edges, construct_offsets;
    std::uint64_t construct_anchor = 0;
    std::uint64_t maxklc_k = 0;
    std::vector<std::string> census_cubes;
    std::string census_edges;
    bool census_example35 = false, census_verify = false;
    std::string scan_filter = "prop32_unique";

    CLI::App* c_lc = app.add_subcommand("lc", "linear complexity (Games-Chan + oracle check)");
    add_seq_options(c_lc, lc_in);
    c_lc->add_flag("--verify", lc_verify, "force the factor-multiplicity cross-check");

    CLI::App* c_klc = app.add_subcommand("klc", "k-error linear complexity (exhaustive)");
    add_seq_options(c_klc, klc_in);
    c_klc->add_option("--k", klc_k, "error budget")->required();

    CLI::App* c_kmin = app.add_subcommand("kmin", "first k at which the complexity decreases");
    add_seq_options(c_kmin, kmin_in);

    CLI::App* c_spec = app.add_subcommand("spectrum", "critical-point spectrum (CELCS)");
    add_seq_options(c_spec, spec_in);

    CLI::App* c_dec = app.add_subcommand("decompose", "standard cube decomposition");
    add_seq_options(c_dec, dec_in);

    CLI::App* c_rec = app.add_subcommand("recognize", "recognize the support as a cube");
    add_seq_options(c_rec, rec_in);

    CLI::App* c_con = app.add_subcommand("construct", "construct a cube from parameters");
    c_con->add_option("--n", construct_n, "period exponent")->required();
    c_con->add_option("--edges", construct_edges, "edge exponents, comma separated")->required();
    c_con->add_option("--anchor", construct_anchor, "anchor position")->required();
    c_con->add_option("--offsets", construct_offsets, "odd multiplier per edge")->required();

    CLI::App* c_max = app.add_subcommand("maxklc", "maximum k-error complexity over all sequences");
    c_max->add_option("--n", maxklc_n, "period exponent")->required();
    c_max->add_option("--k", maxklc_k, "error budget")->required();

    CLI::App* c_cen = app.add_subcommand("census", "closed-form cube counts");
    c_cen->add_option("--n", census_n, "period exponent")->required();
    c_cen->add_option("--cube", census_cubes, "edge exponents of one cube (repeatable)");
    c_cen->add_option("--edges", census_edges, "edge exponents (single-cube shorthand)");
    c_cen->add_flag("--example35", census_example35, "the {0,1}+{0,3} two-cube configuration");
    c_cen->add_flag("--verify", census_verify, "cross-check by exhaustive enumeration");

    CLI::App* c_aud = app.add_subcommand("quad-audit", "4-element predictor vs oracle audit");
    c_aud->add_option("--n", audit_n, "period exponent")->required();

    CLI::App* c_scan = app.add_subcommand("scan", "decomposition-prediction vs oracle sweep");
    c_scan->add_option("--n", scan_n, "period exponent")->required();
    c_scan->add_option("--filter", scan_filter, "prop32_unique (default) or all_even_weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_lc->parsed()) return run_lc(opts, lc_in, lc_verify);
        if (c_klc->parsed()) return run_klc(opts, klc_in, klc_k);
        if (c_kmin->parsed()) return run_kmin(opts, kmin_in);
        if (c_spec->parsed()) return run_spectrum(opts, spec_in);
        if (c_dec->parsed()) return run_decompose(opts, dec_in);
        if (c_rec->parsed()) return run_recognize(opts, rec_in);
        if (c_con->parsed())
            return run_construct(opts, construct_n, construct_edges, construct_anchor,
                                 construct_offsets);
        if (c_max->parsed()) return run_maxklc(opts, maxklc_n, maxklc_k);
        if (c_cen->parsed()) {
            if (!census_edges.empty()) census_cubes.insert(census_cubes.begin(), census_edges);
            return run_census(opts, census_n, census_cubes, census_example35, census_verify);
        }
        if (c_aud->parsed()) return run_quad_audit(opts, audit_n);
        if (c_scan->parsed()) return run_scan(opts, scan_n, scan_filter);
        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
