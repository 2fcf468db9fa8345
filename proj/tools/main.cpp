// tvlab — command-line frontend for the exact-arithmetic Tverberg/stair-convexity
// workbench.  Every subcommand emits a machine-readable JSON report on stdout
// (human-readable tables behind --pretty); reports are byte-identical for
// identical (command, parameters, seed), so they double as golden fixtures.
//
// Exit codes: 0 success, 1 invariant violation detected (a cross-check that
// should never fail did fail), 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "tvlab/tvlab.hpp"

namespace {

using nlohmann::json;
using namespace tvlab;

// ---------------------------------------------------------------------------
// Output plumbing

struct GlobalOptions {
    int workers = 1;
    bool pretty = false;
    bool timing = false;
};

int default_workers() {
    if (const char* env = std::getenv("TVLAB_WORKERS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1 && n <= 4096) return static_cast<int>(n);
    }
    return 1;
}

bool inline_friendly(const json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
        if (e.is_structured()) return false;
    }
    return v.dump().size() <= 72;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void pretty_value(const json& v, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!it.value().is_structured()) {
                out << pad << it.key() << ": " << scalar_text(it.value()) << '\n';
            } else if (inline_friendly(it.value())) {
                out << pad << it.key() << ": " << it.value().dump() << '\n';
            } else if (it.value().empty()) {
                out << pad << it.key() << ": " << (it.value().is_array() ? "[]" : "{}") << '\n';
            } else {
                out << pad << it.key() << ":\n";
                pretty_value(it.value(), out, indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_structured()) {
                out << pad << "- " << scalar_text(e) << '\n';
            } else if (inline_friendly(e)) {
                out << pad << "- " << e.dump() << '\n';
            } else {
                out << pad << "-\n";
                pretty_value(e, out, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(v) << '\n';
    }
}

void emit(json report, const GlobalOptions& g, std::chrono::steady_clock::time_point start) {
    if (g.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    }
    if (g.pretty) {
        pretty_value(report, std::cout, 0);
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

struct Outcome {
    json report;
    int exit_code = 0;
};

// ---------------------------------------------------------------------------
// types

struct TypesOptions {
    int d = 0;
    int r = 0;
    bool colorful = false;
    bool zigzag_only = false;
    std::vector<int> sizes;
    bool with_consecutive = false;
    bool without_consecutive = false;
};

json type_record(const TverbergType& type) {
    json rec;
    rec["encoding"] = encode(type);
    rec["parts"] = parts_notation(type);
    auto sizes = type.part_sizes();
    rec["part_sizes"] = sizes;
    rec["colorful"] = is_colorful(type);
    rec["consecutive_pair"] = has_consecutive_pair(type);
    rec["mirror"] = encode(mirror(type));
    return rec;
}

Outcome run_types(const TypesOptions& opt) {
    json params;
    params["d"] = opt.d;
    params["r"] = opt.r;
    params["colorful"] = opt.colorful;
    params["zigzag"] = opt.zigzag_only;
    params["sizes"] = opt.sizes.empty() ? json() : json(opt.sizes);
    params["consecutive_pair"] =
        opt.with_consecutive ? json(true) : (opt.without_consecutive ? json(false) : json());

    const int t = t_param(opt.d, opt.r);
    std::vector<TverbergType> all;
    if (opt.zigzag_only) {
        all.push_back(zigzag(opt.d, opt.r));
    } else if (opt.colorful) {
        Int expected = 1;
        Int fact = 1;
        for (int k = 2; k < opt.r; ++k) fact *= k;
        for (int i = 0; i < opt.d; ++i) expected *= fact;
        if (expected > 100000) {
            throw PreconditionError("colorful enumeration is too large for d=" + std::to_string(opt.d) +
                                    ", r=" + std::to_string(opt.r));
        }
        for (const std::string& enc : enumerate_colorful(opt.d, opt.r)) {
            all.push_back(decode(enc, opt.d, opt.r));
        }
    } else {
        if (t > 20 || stirling2(t, opt.r) > 1000000ULL) {
            throw PreconditionError("full enumeration of all types is too large; restrict with --colorful");
        }
        for_each_set_partition(t, opt.r, [&](const std::vector<std::vector<int>>& parts0) {
            std::vector<std::vector<int>> parts;
            parts.reserve(parts0.size());
            for (const auto& p : parts0) {
                std::vector<int> q;
                q.reserve(p.size());
                for (int x : p) q.push_back(x + 1);
                parts.push_back(std::move(q));
            }
            all.emplace_back(opt.d, opt.r, std::move(parts));
            return true;
        });
    }

    std::vector<int> wanted_sizes = opt.sizes;
    std::sort(wanted_sizes.begin(), wanted_sizes.end());
    std::vector<json> records;
    std::uint64_t colorful_count = 0, consecutive_count = 0;
    for (const TverbergType& type : all) {
        if (!wanted_sizes.empty()) {
            auto sizes = type.part_sizes();
            std::sort(sizes.begin(), sizes.end());
            if (sizes != wanted_sizes) continue;
        }
        const bool consec = has_consecutive_pair(type);
        if (opt.with_consecutive && !consec) continue;
        if (opt.without_consecutive && consec) continue;
        if (is_colorful(type)) ++colorful_count;
        if (consec) ++consecutive_count;
        records.push_back(type_record(type));
    }
    std::sort(records.begin(), records.end(), [](const json& a, const json& b) {
        return a.at("encoding").get<std::string>() < b.at("encoding").get<std::string>();
    });

    json j = reports::envelope("types", std::move(params));
    j["t"] = t;
    j["count"] = records.size();
    j["colorful_count"] = colorful_count;
    j["consecutive_pair_count"] = consecutive_count;
    constexpr std::size_t kListCap = 10000;
    j["truncated"] = records.size() > kListCap;
    if (records.size() > kListCap) records.resize(kListCap);
    j["types"] = std::move(records);
    return {std::move(j), 0};
}

// ---------------------------------------------------------------------------
// appendix

Outcome run_appendix() {
    json j = reports::envelope("appendix", json::object());
    j["census_333"] = reports::census_333_json(census_333());

    const auto strings = plane_side_predicates_3334();
    json p;
    p["count"] = strings.size();
    const std::string symmetric = "abcxabcxabcx";
    p["symmetric_string"] = symmetric;
    p["symmetric_present"] = std::find(strings.begin(), strings.end(), symmetric) != strings.end();
    p["strings"] = strings;
    j["predicates_3334"] = std::move(p);
    return {std::move(j), 0};
}

// ---------------------------------------------------------------------------
// tverberg

struct TverbergOptions {
    std::string points_file;
    int r = 0;
};

Outcome run_tverberg(const TverbergOptions& opt, const GlobalOptions& g) {
    const PointSequence seq = load_sequence(opt.points_file);
    auto certs = enumerate_tverberg_partitions(seq, opt.r, g.workers);
    std::sort(certs.begin(), certs.end(), [](const TverbergCertificate& a, const TverbergCertificate& b) {
        return encode(a.type) < encode(b.type);
    });

    json params;
    params["points"] = opt.points_file;
    params["r"] = opt.r;
    json j = reports::envelope("tverberg", std::move(params));
    j["dim"] = seq.dim();
    j["n"] = seq.size();
    j["count"] = certs.size();
    auto types = json::array();
    auto partitions = json::array();
    for (const auto& cert : certs) {
        types.push_back(encode(cert.type));
        partitions.push_back(reports::certificate_json(cert));
    }
    j["types"] = std::move(types);
    j["partitions"] = std::move(partitions);
    return {std::move(j), 0};
}

// ---------------------------------------------------------------------------
// stair

struct StairOptions {
    std::string points_file;
    int r = 0;
    bool oracle = false;
    bool recursive = false;
    bool both = false;
};

Outcome run_stair(const StairOptions& opt) {
    auto points = load_points(opt.points_file);
    if (points.empty()) throw ParseError("points file '" + opt.points_file + "' is empty");
    const int dim = points.front().dim();
    const StairConfig config{dim, std::move(points)};

    std::string algorithm = "both";
    StairTverbergResult result;
    if (opt.oracle) {
        algorithm = "oracle";
        result = enumerate_stair_tverberg(config, opt.r, StairAlgorithm::brute_force);
    } else if (opt.recursive) {
        algorithm = "recursive";
        result = enumerate_stair_tverberg(config, opt.r, StairAlgorithm::recursive);
    } else {
        result = enumerate_stair_tverberg_checked(config, opt.r);
    }

    json params;
    params["points"] = opt.points_file;
    params["r"] = opt.r;
    params["algorithm"] = algorithm;
    json j = reports::envelope("stair", std::move(params));
    j["dim"] = dim;
    j["n"] = config.points.size();
    const std::uint64_t expected = expected_tverberg_count(dim, opt.r);
    j["expected_count"] = expected;
    j.update(reports::stair_result_json(result));
    const bool count_ok = result.partitions.size() == expected;
    j["count_matches_expected"] = count_ok;
    return {std::move(j), count_ok ? 0 : 1};
}

// ---------------------------------------------------------------------------
// grid

struct GridOptions {
    int d = 0;
    int r = 0;
    bool diagonal = false;
    bool random_subsets = false;
    bool sierksma = false;
    bool census = false;
    bool closeness = false;
    int trials = 20;
    std::uint64_t seed = 0;
    int samples = 1000;
};

Outcome run_grid(const GridOptions& opt, const GlobalOptions& g) {
    const int t = t_param(opt.d, opt.r);
    json params;
    params["d"] = opt.d;
    params["r"] = opt.r;

    if (opt.diagonal) {
        params["mode"] = "diagonal";
        const auto diag = stretched_diagonal_grid(opt.d, t);
        const auto report = check_transference(diag.spec, diag.points, opt.r, g.workers);
        json j = reports::envelope("grid", std::move(params));
        j["side"] = diag.spec.side;
        const std::uint64_t expected = expected_tverberg_count(opt.d, opt.r);
        j["expected_positive"] = expected;
        j.update(reports::transference_json(report));
        const bool ok = report.agreed() && report.euclidean_positive == expected;
        return {std::move(j), ok ? 0 : 1};
    }

    if (opt.random_subsets) {
        params["mode"] = "random";
        params["trials"] = opt.trials;
        params["seed"] = opt.seed;
        if (opt.trials < 1) throw PreconditionError("--random requires at least one trial");
        const int side = sampling_side(opt.d, t);
        const auto spec = stretched_grid(opt.d, side);
        const std::uint64_t expected = expected_tverberg_count(opt.d, opt.r);
        bool all_agreed = true;
        std::map<std::uint64_t, int> distribution;
        auto failures = json::array();
        for (int trial = 0; trial < opt.trials; ++trial) {
            RandomEngine engine = seeded_engine(opt.seed, static_cast<std::uint64_t>(trial));
            const auto pts = sample_far_apart(spec, t, 2 * opt.d + 3, engine);
            const auto report = check_transference(spec, pts, opt.r, g.workers);
            ++distribution[report.euclidean_positive];
            if (!report.agreed()) {
                all_agreed = false;
                json f;
                f["trial"] = trial;
                f["report"] = reports::transference_json(report);
                failures.push_back(std::move(f));
            }
        }
        json j = reports::envelope("grid", std::move(params));
        j["side"] = side;
        j["expected_positive"] = expected;
        j["all_agreed"] = all_agreed;
        auto dist = json::object();
        for (const auto& [count, times] : distribution) dist[std::to_string(count)] = times;
        j["positive_distribution"] = std::move(dist);
        j["failures"] = std::move(failures);
        const bool constant =
            distribution.size() == 1 && distribution.begin()->first == expected;
        return {std::move(j), (all_agreed && constant) ? 0 : 1};
    }

    if (opt.sierksma) {
        params["mode"] = "sierksma";
        params["trials"] = opt.trials;
        params["seed"] = opt.seed;
        const auto report = sierksma_experiment(opt.d, opt.r, opt.trials, opt.seed, g.workers);
        json j = reports::envelope("grid", std::move(params));
        j.update(reports::sierksma_json(report));
        return {std::move(j), report.constant() ? 0 : 1};
    }

    if (opt.census) {
        params["mode"] = "census";
        const auto types = diagonal_type_census(opt.d, opt.r, g.workers);
        const auto colorful = enumerate_colorful(opt.d, opt.r);
        json j = reports::envelope("grid", std::move(params));
        j["types"] = types;
        j["count"] = types.size();
        j["colorful_count"] = colorful.size();
        const bool matches = types == colorful;
        j["matches_colorful"] = matches;
        return {std::move(j), matches ? 0 : 1};
    }

    // closeness
    params["mode"] = "closeness";
    params["samples"] = opt.samples;
    const auto diag = stretched_diagonal_grid(opt.d, t);
    const auto report = closeness_probe(diag.spec, diag.points.front(), diag.points.back(), opt.samples);
    json j = reports::envelope("grid", std::move(params));
    j["side"] = diag.spec.side;
    j["pair"] = json::array({0, t - 1});
    j.update(reports::closeness_json(report));
    constexpr double kBound = 1.01;
    j["bound"] = kBound;
    const bool ok = report.max_deviation <= kBound;
    j["within_bound"] = ok;
    return {std::move(j), ok ? 0 : 1};
}

// ---------------------------------------------------------------------------
// eval

struct EvalOptions {
    std::string statement;
    std::string points_file;
    std::string family;
    int d = 0;
    int n = 0;
    std::uint64_t seed = 0;
};

PointSequence family_sequence(const std::string& family, int d, int n, std::uint64_t seed) {
    switch (family_kind_from_name(family)) {
        case SequenceFamily::Kind::moment_curve: return moment_curve_sequence(d, n);
        case SequenceFamily::Kind::perturbed_convex: return random_homogeneous_sequence(d, n, seed);
        case SequenceFamily::Kind::stretched_diagonal: return stretched_diagonal(d, n);
    }
    throw PreconditionError("unknown sequence family");
}

Outcome run_eval(const EvalOptions& opt) {
    json params;
    params["statement"] = opt.statement;
    std::optional<PointSequence> seq;
    if (!opt.points_file.empty()) {
        params["points"] = opt.points_file;
        seq = load_sequence(opt.points_file);
    } else {
        if (opt.d < 1 || opt.n < 1) {
            throw PreconditionError("--family evaluation requires --d and --n");
        }
        params["family"] = opt.family;
        params["d"] = opt.d;
        params["n"] = opt.n;
        params["seed"] = opt.seed;
        seq = family_sequence(opt.family, opt.d, opt.n, opt.seed);
    }

    const SeparationStatement statement = parse_statement(opt.statement, seq->dim());
    const bool value = eval_statement(*seq, statement);
    json j = reports::envelope("eval", std::move(params));
    j["canonical"] = statement_to_string(statement);
    j["dim"] = seq->dim();
    j["n"] = seq->size();
    j["value"] = value;
    return {std::move(j), 0};
}

// ---------------------------------------------------------------------------
// scan

struct ScanOptions {
    std::string statement;
    std::string predicate;
    std::string type_encoding;
    bool negate = false;
    int d = 0;
    std::string family = "perturbed-convex";
    std::uint64_t seed = 0;
    int min_n = 0;
    int max_n = 0;
    int budget = 100;
};

Predicate build_predicate(const ScanOptions& opt) {
    if (!opt.statement.empty()) {
        if (opt.d < 1) throw PreconditionError("--statement requires --d");
        return statement_predicate(opt.statement, opt.d);
    }
    if (opt.predicate == "sixpt") {
        if (opt.d != 0 && opt.d != 2) throw PreconditionError("sixpt is a planar predicate (d = 2)");
        return sixpt_predicate();
    }
    if (opt.predicate == "convex4") {
        if (opt.d != 0 && opt.d != 2) throw PreconditionError("convex4 is a planar predicate (d = 2)");
        return convex_position_predicate();
    }
    if (opt.predicate == "tv-type") {
        if (opt.type_encoding.empty()) throw PreconditionError("--predicate tv-type requires --type");
        if (opt.d < 1) throw PreconditionError("--predicate tv-type requires --d");
        int r = 0;
        for (char c : opt.type_encoding) {
            if (c < '1' || c > '9') throw ParseError("type encodings use symbols '1'..'9'");
            r = std::max(r, c - '0');
        }
        return tv_type_predicate(decode(opt.type_encoding, opt.d, r));
    }
    throw PreconditionError("unknown predicate '" + opt.predicate +
                            "' (expected sixpt, convex4, or tv-type)");
}

Outcome run_scan(const ScanOptions& opt, const GlobalOptions& g) {
    Predicate pred = build_predicate(opt);
    if (opt.negate) pred = negation(std::move(pred));
    SequenceFamily family;
    family.kind = family_kind_from_name(opt.family);
    family.dim = pred.dim;
    family.seed = opt.seed;
    const int max_n = opt.max_n > 0 ? opt.max_n : pred.arity;
    const auto report = scan_unavoidability(pred, family, max_n, opt.budget, g.workers, opt.min_n);

    json params;
    params["statement"] = opt.statement.empty() ? json() : json(opt.statement);
    params["predicate"] = opt.predicate.empty() ? json() : json(opt.predicate);
    params["type"] = opt.type_encoding.empty() ? json() : json(opt.type_encoding);
    params["negate"] = opt.negate;
    params["family"] = opt.family;
    params["seed"] = opt.seed;
    params["min_n"] = opt.min_n;
    params["max_n"] = max_n;
    params["budget"] = opt.budget;
    json j = reports::envelope("scan", std::move(params));
    j.update(reports::scan_json(report));
    return {std::move(j), report.falsified() ? 1 : 0};
}

} // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for Tverberg types, stair-convexity, and the stretched grid"};
    app.require_subcommand(1);

    GlobalOptions global;
    global.workers = default_workers();
    app.add_option("--workers", global.workers, "worker threads for parallel experiments")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    app.add_flag("--pretty", global.pretty, "print a human-readable table instead of JSON");
    app.add_flag("--timing", global.timing, "include wall-clock timing in the report");

    TypesOptions types_opt;
    auto* types_cmd = app.add_subcommand("types", "enumerate and classify Tverberg types");
    types_cmd->fallthrough();
    types_cmd->add_option("--d", types_opt.d, "dimension")->required()->check(CLI::Range(1, 16));
    types_cmd->add_option("--r", types_opt.r, "number of parts")->required()->check(CLI::Range(2, 9));
    auto* colorful_flag = types_cmd->add_flag("--colorful", types_opt.colorful, "only colorful types");
    auto* zigzag_flag = types_cmd->add_flag("--zigzag", types_opt.zigzag_only, "only the zigzag type");
    auto* sizes_opt = types_cmd
                          ->add_option("--sizes", types_opt.sizes,
                                       "filter by part-size multiset, e.g. 3,3,3,4")
                          ->delimiter(',');
    auto* consec_flag = types_cmd->add_flag("--consecutive", types_opt.with_consecutive,
                                            "only types where some part contains two consecutive integers");
    auto* no_consec_flag = types_cmd->add_flag("--no-consecutive", types_opt.without_consecutive,
                                               "only types with no consecutive pair");
    zigzag_flag->excludes(colorful_flag)->excludes(sizes_opt)->excludes(consec_flag)->excludes(no_consec_flag);
    consec_flag->excludes(no_consec_flag);

    auto* appendix_cmd = app.add_subcommand("appendix", "reproduce both enumeration censuses end-to-end");
    appendix_cmd->fallthrough();

    TverbergOptions tverberg_opt;
    auto* tverberg_cmd = app.add_subcommand("tverberg", "enumerate Tverberg partitions of a point file");
    tverberg_cmd->fallthrough();
    tverberg_cmd->add_option("--points", tverberg_opt.points_file, "points file (.csv or .json)")->required();
    tverberg_cmd->add_option("--r", tverberg_opt.r, "number of parts")->required()->check(CLI::Range(2, 9));

    StairOptions stair_opt;
    auto* stair_cmd = app.add_subcommand("stair", "enumerate stair-Tverberg partitions of a point file");
    stair_cmd->fallthrough();
    stair_cmd->add_option("--points", stair_opt.points_file, "points file (.csv or .json)")->required();
    stair_cmd->add_option("--r", stair_opt.r, "number of parts")->required()->check(CLI::Range(2, 9));
    auto* stair_mode = stair_cmd->add_option_group("algorithm");
    stair_mode->add_flag("--oracle", stair_opt.oracle, "brute-force hull-intersection oracle only");
    stair_mode->add_flag("--recursive", stair_opt.recursive, "recursive peeling algorithm only");
    stair_mode->add_flag("--both", stair_opt.both, "run both algorithms and cross-check (default)");
    stair_mode->require_option(0, 1);

    GridOptions grid_opt;
    auto* grid_cmd = app.add_subcommand("grid", "stretched-grid experiments");
    grid_cmd->fallthrough();
    grid_cmd->add_option("--d", grid_opt.d, "dimension")->required()->check(CLI::Range(1, 8));
    grid_cmd->add_option("--r", grid_opt.r, "number of parts")->required()->check(CLI::Range(2, 9));
    auto* grid_mode = grid_cmd->add_option_group("mode");
    grid_mode->add_flag("--diagonal", grid_opt.diagonal,
                        "transference check on the first T(d,r) diagonal points");
    grid_mode->add_flag("--random", grid_opt.random_subsets,
                        "transference checks on random far-apart grid subsets");
    grid_mode->add_flag("--sierksma", grid_opt.sierksma,
                        "Tverberg-count distribution over random far-apart subsets");
    grid_mode->add_flag("--census", grid_opt.census,
                        "Tverberg type census of the diagonal vs the colorful types");
    grid_mode->add_flag("--closeness", grid_opt.closeness,
                        "segment-to-stair-path closeness probe on the diagonal");
    grid_mode->require_option(1);
    grid_cmd->add_option("--trials", grid_opt.trials, "number of random trials")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    grid_cmd->add_option("--seed", grid_opt.seed, "random seed")->capture_default_str();
    grid_cmd->add_option("--samples", grid_opt.samples, "segment samples for --closeness")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();

    EvalOptions eval_opt;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a separation statement on a point sequence");
    eval_cmd->fallthrough();
    eval_cmd->add_option("statement", eval_opt.statement, "statement text, e.g. \"1368(27:459)\"")->required();
    auto* eval_points = eval_cmd->add_option("--points", eval_opt.points_file, "points file (.csv or .json)");
    auto* eval_family = eval_cmd->add_option(
        "--family", eval_opt.family, "sequence family: moment-curve, perturbed-convex, stretched-diagonal");
    eval_cmd->add_option("--d", eval_opt.d, "dimension (with --family)")->check(CLI::Range(1, 8));
    eval_cmd->add_option("--n", eval_opt.n, "sequence length (with --family)")->check(CLI::Range(1, 64));
    eval_cmd->add_option("--seed", eval_opt.seed, "random seed (perturbed-convex only)")->capture_default_str();
    eval_points->excludes(eval_family);
    eval_family->excludes(eval_points);

    ScanOptions scan_opt;
    auto* scan_cmd = app.add_subcommand("scan", "search a sequence family for predicate-avoiding sequences");
    scan_cmd->fallthrough();
    auto* scan_statement = scan_cmd->add_option("--statement", scan_opt.statement, "statement text predicate");
    auto* scan_pred =
        scan_cmd->add_option("--predicate", scan_opt.predicate, "named predicate: sixpt, convex4, tv-type");
    scan_cmd->add_option("--type", scan_opt.type_encoding, "type encoding for --predicate tv-type");
    scan_cmd->add_flag("--negate", scan_opt.negate, "scan for the predicate's negation");
    scan_cmd->add_option("--d", scan_opt.d, "dimension (statement and tv-type predicates)")
        ->check(CLI::Range(1, 8));
    scan_cmd->add_option("--family", scan_opt.family,
                         "sequence family: moment-curve, perturbed-convex, stretched-diagonal")
        ->capture_default_str();
    scan_cmd->add_option("--seed", scan_opt.seed, "random seed")->capture_default_str();
    scan_cmd->add_option("--min-n", scan_opt.min_n, "smallest sequence length to scan (default: predicate arity)")
        ->check(CLI::Range(1, 64));
    scan_cmd->add_option("--max-n", scan_opt.max_n, "largest sequence length to scan (default: predicate arity)")
        ->check(CLI::Range(1, 64));
    scan_cmd->add_option("--budget", scan_opt.budget, "total instance budget")
        ->check(CLI::Range(1, 10000000))
        ->capture_default_str();
    scan_statement->excludes(scan_pred);
    scan_pred->excludes(scan_statement);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        if (types_cmd->parsed()) {
            outcome = run_types(types_opt);
        } else if (appendix_cmd->parsed()) {
            outcome = run_appendix();
        } else if (tverberg_cmd->parsed()) {
            outcome = run_tverberg(tverberg_opt, global);
        } else if (stair_cmd->parsed()) {
            outcome = run_stair(stair_opt);
        } else if (grid_cmd->parsed()) {
            outcome = run_grid(grid_opt, global);
        } else if (eval_cmd->parsed()) {
            if (eval_opt.points_file.empty() && eval_opt.family.empty()) {
                throw PreconditionError("eval requires --points or --family");
            }
            outcome = run_eval(eval_opt);
        } else if (scan_cmd->parsed()) {
            if (scan_opt.statement.empty() && scan_opt.predicate.empty()) {
                throw PreconditionError("scan requires --statement or --predicate");
            }
            outcome = run_scan(scan_opt, global);
        }
        emit(std::move(outcome.report), global, start);
        return outcome.exit_code;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
