// kns: command-line front end for the family toolkit.
//
// Subcommands: check, construct, eval, search, canon, verify.
// Config precedence: flags > KNS_* environment variables > defaults.
// Exit codes: 0 success/verified, 1 property failure, 2 input error,
// 3 resource limit (including a search stopped before exhaustion).
//
// Whenever --json-out/--csv-out names a file, a <file>.manifest.json is
// written beside it recording the command line, the resolved configuration,
// wall time, and a content digest of the emitted file.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kns/json_io.hpp"

using namespace kns;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_property_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_resource_limit = 3;

std::string g_command_line;
std::chrono::steady_clock::time_point g_start;

double wall_ms() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     g_start)
        .count();
}

BigInt to_bigint(const std::string& flag, const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(flag + ": expected a nonnegative integer, got '" + text + "'");
    return BigInt(text);
}

// "a", "a..b", or "a..b..step" over nonnegative integers.
struct Range {
    BigInt lo, hi, step{1};
};

Range parse_range(const std::string& flag, const std::string& text) {
    Range r;
    const auto first = text.find("..");
    if (first == std::string::npos) {
        r.lo = r.hi = to_bigint(flag, text);
        return r;
    }
    r.lo = to_bigint(flag, text.substr(0, first));
    const auto rest = text.substr(first + 2);
    const auto second = rest.find("..");
    if (second == std::string::npos) {
        r.hi = to_bigint(flag, rest);
    } else {
        r.hi = to_bigint(flag, rest.substr(0, second));
        r.step = to_bigint(flag, rest.substr(second + 2));
    }
    if (r.step < 1) throw ParseError(flag + ": step must be positive");
    if (r.hi < r.lo) throw ParseError(flag + ": empty range");
    return r;
}

BigInt range_count(const Range& r) { return (r.hi - r.lo) / r.step + 1; }

// Writes payload to path (or stdout when path is empty) and, for real files,
// a sibling manifest whose digest matches the bytes written.
void emit(const std::string& path, const std::string& payload, const Json& config,
          const Json& seeds = Json()) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ParseError("cannot open output file: " + path);
        out << payload;
    }
    Json manifest;
    manifest["command"] = g_command_line;
    manifest["version"] = std::string(version);
    manifest["config"] = config;
    if (!seeds.is_null()) manifest["seeds"] = seeds;
    manifest["wall_ms"] = wall_ms();
    manifest["output"] = {{"path", path},
                          {"bytes", payload.size()},
                          {"fnv1a64", fnv1a64_hex(payload)}};
    std::ofstream mf(path + ".manifest.json", std::ios::binary);
    mf << manifest.dump(2) << '\n';
}

// ---------------------------------------------------------------- check ----

struct CheckArgs {
    std::string family_path;
    int t = 1;
    int s = 0;
    std::string json_out;
};

int run_check(const CheckArgs& a) {
    const Family f = load_family_file(a.family_path);
    const bool intersecting = is_t_intersecting(f, a.t);
    const auto [almost, defects] = is_s_almost_t_intersecting(f, a.t, a.s);

    Json report;
    report["n"] = f.n();
    report["k"] = f.k();
    report["size"] = f.size();
    report["t"] = a.t;
    report["s"] = a.s;
    report["t_intersecting"] = intersecting;
    report["s_almost_t_intersecting"] = almost;
    report["kneser_edge_agrees"] = kneser_edge_check(f, a.t, a.s) == almost;
    report["defects"] = defect_report_to_json(f, defects);
    report["cover"] = f.empty() ? Json() : cover_to_json(covering_number(f, a.t));
    report["checks"] = {
        {"kt1_size_bound", to_string(check_kt1_size_bound(f, a.t, a.s))},
        {"cover_excess_bound", to_string(check_cover_excess_bound(f, a.t, a.s))},
        {"min_covers_intersecting", to_string(check_min_covers_intersecting(f, a.t, a.s))},
        {"restriction_bound_at_empty",
         to_string(check_restriction_bound(f, a.t, a.s, KSubset(0, f.n())))},
    };

    const Json config = {{"family", a.family_path}, {"t", a.t}, {"s", a.s}};
    emit(a.json_out, report.dump(2) + "\n", config);
    return almost ? exit_ok : exit_property_failure;
}

// ------------------------------------------------------------ construct ----

struct ConstructArgs {
    std::string id;
    std::string n_text;
    std::optional<int> k, t, s, extra, depth;
    std::uint64_t a_seed = 0, b_seed = 0;
    bool with_checks = false;
    std::string json_out;
};

int need(const std::optional<int>& v, const char* flag, const std::string& id) {
    if (!v) throw ParseError(std::string(flag) + " is required for --id " + id);
    return *v;
}

int run_construct(const ConstructArgs& a) {
    const BigInt n = to_bigint("--n", a.n_text);
    NamedConstruction c{"", Params(BigInt(2), 1, 1, 0), BigInt(0), false, std::nullopt};
    if (a.id == "star") {
        c = star_family(n, need(a.k, "--k", a.id), need(a.t, "--t", a.id));
    } else if (a.id == "hm") {
        c = hm_family(n, need(a.k, "--k", a.id), need(a.t, "--t", a.id),
                      need(a.s, "--s", a.id), a.a_seed, a.b_seed);
    } else if (a.id == "near_star") {
        c = near_star_family(n, need(a.t, "--t", a.id), need(a.extra, "--extra", a.id));
    } else if (a.id == "relaxed_core") {
        c = relaxed_core_family(n, need(a.t, "--t", a.id), need(a.depth, "--depth", a.id));
    } else if (a.id == "kernel_hit") {
        c = kernel_hit_family(n, need(a.t, "--t", a.id), need(a.s, "--s", a.id));
    } else if (a.id == "deep_kernel_hit") {
        c = deep_kernel_hit_family(n, need(a.t, "--t", a.id), need(a.s, "--s", a.id));
    } else {
        bool found = false;
        for (ExtremalCase cs : all_cases())
            if (a.id == to_string(cs)) {
                c = classification_family(cs, need(a.t, "--t", a.id),
                                          need(a.s, "--s", a.id), n);
                found = true;
                break;
            }
        if (!found) throw ParseError("unknown construction id: " + a.id);
    }

    Json config = {{"id", a.id}, {"n", a.n_text}, {"with_checks", a.with_checks}};
    if (a.k) config["k"] = *a.k;
    if (a.t) config["t"] = *a.t;
    if (a.s) config["s"] = *a.s;
    if (a.extra) config["extra"] = *a.extra;
    if (a.depth) config["depth"] = *a.depth;
    const Json seeds = a.id == "hm"
                           ? Json{{"a_seed", a.a_seed}, {"b_seed", a.b_seed}}
                           : Json();
    emit(a.json_out, construction_to_json(c, a.with_checks).dump(2) + "\n", config, seeds);
    if (a.with_checks && !self_check(c).pass()) return exit_property_failure;
    return exit_ok;
}

// ----------------------------------------------------------------- eval ----

struct EvalArgs {
    std::string which;
    std::vector<std::string> params;
    std::string csv_out;
};

int parse_small(const std::string& flag, const std::string& text) {
    const BigInt v = to_bigint(flag, text);
    if (v > 1'000'000) throw ParseError(flag + ": value too large");
    return static_cast<int>(v);
}

int run_eval(const EvalArgs& a) {
    const bool has_x = a.which == "f" || a.which == "g";
    if (!has_x && a.which != "h") throw ParseError("eval: which must be f, g, or h");
    const std::size_t expect = has_x ? 5 : 4;
    if (a.params.size() != expect)
        throw ParseError("eval " + a.which + ": expected " + std::to_string(expect) +
                         " arguments (n k t s" + (has_x ? " x)" : ")"));

    const Range n_range = parse_range("n", a.params[0]);
    const int k = parse_small("k", a.params[1]);
    const int t = parse_small("t", a.params[2]);
    const int s = parse_small("s", a.params[3]);
    const Range x_range = has_x ? parse_range("x", a.params[4]) : Range{};
    if (has_x && x_range.hi > 1'000'000) throw ParseError("x: value too large");
    if (range_count(n_range) * range_count(x_range) > 1'000'000)
        throw LimitError("eval: range would emit more than 10^6 rows");

    const bool sweep = n_range.lo != n_range.hi || x_range.lo != x_range.hi;
    std::string out;
    if (sweep) out = "which,n,k,t,s,x,value\n";
    for (BigInt n = n_range.lo; n <= n_range.hi; n += n_range.step) {
        for (BigInt xv = x_range.lo; xv <= x_range.hi; xv += x_range.step) {
            BigInt value;
            std::string x_cell;
            if (a.which == "f") {
                value = eval_f(n, k, t, s, static_cast<int>(xv));
                x_cell = xv.str();
            } else if (a.which == "g") {
                value = eval_g(n, k, t, s, static_cast<int>(xv));
                x_cell = xv.str();
            } else if (k < t + 1 || n < 2 * k - t + s) {
                std::cerr << "warning: h hypothesis (k >= t+1, n >= 2k-t+s) fails at n="
                          << n << "; raw formula value printed\n";
                value = eval_h_raw(n, k, t, s);
            } else {
                value = eval_h(n, k, t, s);
            }
            if (sweep)
                out += a.which + "," + n.str() + "," + std::to_string(k) + "," +
                       std::to_string(t) + "," + std::to_string(s) + "," + x_cell + "," +
                       value.str() + "\n";
            else
                out += value.str() + "\n";
        }
    }

    const Json config = {{"which", a.which}, {"n", a.params[0]}, {"k", k},
                         {"t", t},           {"s", s},
                         {"x", has_x ? Json(a.params[4]) : Json()}};
    emit(a.csv_out, out, config);
    return exit_ok;
}

// --------------------------------------------------------------- search ----

struct SearchArgs {
    std::string n_text;
    int k = 1, t = 1, s = 0;
    bool not_t_intersecting = false;
    bool all_extremal = false;
    bool include_families = false;
    std::uint64_t node_limit = SearchConfig{}.node_limit;
    std::int64_t time_limit_ms = 0;
    int vertex_cap = SearchConfig{}.vertex_cap;
    std::size_t extremal_cap = SearchConfig{}.extremal_cap;
    std::string json_out;
};

int run_search(const SearchArgs& a) {
    SearchConfig cfg;
    cfg.params = Params(to_bigint("--n", a.n_text), a.k, a.t, a.s);
    cfg.require_not_t_intersecting = a.not_t_intersecting;
    cfg.collect_all_extremal = a.all_extremal;
    cfg.node_limit = a.node_limit;
    cfg.time_limit = std::chrono::milliseconds(a.time_limit_ms);
    cfg.vertex_cap = a.vertex_cap;
    cfg.extremal_cap = a.extremal_cap;

    const SearchResult result = max_family(cfg);

    const Json config = {{"n", a.n_text},
                         {"k", a.k},
                         {"t", a.t},
                         {"s", a.s},
                         {"not_t_intersecting", a.not_t_intersecting},
                         {"all_extremal", a.all_extremal},
                         {"node_limit", a.node_limit},
                         {"time_limit_ms", a.time_limit_ms},
                         {"vertex_cap", a.vertex_cap}};
    emit(a.json_out, search_result_to_json(result, a.include_families).dump(2) + "\n",
         config);
    return result.exhausted ? exit_ok : exit_resource_limit;
}

// ----------------------------------------------------------------- canon ----

struct CanonArgs {
    std::string family_path;
    std::string json_out;
};

int run_canon(const CanonArgs& a) {
    const Family f = load_family_file(a.family_path);
    const CanonicalForm form = canonicalize(f);
    std::string payload;
    if (a.json_out.empty()) {
        payload = form.hex() + "\n";
    } else {
        Json j;
        j["k"] = form.words[0];
        j["support"] = form.words[1];
        j["count"] = form.words[2];
        j["hex"] = form.hex();
        j["words"] = form.words;
        payload = j.dump(2) + "\n";
    }
    emit(a.json_out, payload, Json{{"family", a.family_path}});
    return exit_ok;
}

// ---------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string suite;
    int t_min = 1, t_max = 3;
    int span_min = 2, span_max = 6;
    int s_min = 1, s_max = 4;
    std::vector<int> n_offsets;
    int vertex_cap = SearchConfig{}.vertex_cap;
    std::string fixture;
    std::string csv_out;
};

std::string csv_flag(bool b) { return b ? "true" : "false"; }

// One CSV row per rebuilt construction; grid kept small enough that every
// family materializes instantly.
std::string verify_constructions(const VerifyArgs& a, bool& failed) {
    std::string csv = "id,n,k,t,s,size,materialized,size_ok,defect_ok,intersecting_ok,pass\n";
    auto add = [&](const NamedConstruction& c) {
        const ConstructionCheck r = self_check(c);
        const std::size_t size = c.family ? c.family->size() : 0;
        csv += c.id + "," + c.params.n.str() + "," + std::to_string(c.params.k) + "," +
               std::to_string(c.params.t) + "," + std::to_string(c.params.s) + "," +
               std::to_string(size) + "," + csv_flag(r.materialized) + "," +
               csv_flag(r.size_ok) + "," + csv_flag(r.defect_ok) + "," +
               csv_flag(r.intersecting_ok) + "," + csv_flag(r.pass()) + "\n";
        if (!r.pass()) failed = true;
    };

    if (!a.fixture.empty()) {
        std::ifstream in(a.fixture, std::ios::binary);
        if (!in) throw ParseError("cannot open fixture: " + a.fixture);
        Json j;
        try {
            j = Json::parse(in);
            const Json& meta = j.at("meta");
            const Json& p = meta.at("params");
            NamedConstruction c{
                meta.at("id").get<std::string>(),
                Params(to_bigint("meta.params.n", p.at("n").get<std::string>()),
                       p.at("k").get<int>(), p.at("t").get<int>(), p.at("s").get<int>()),
                to_bigint("meta.predicted_size",
                          meta.at("predicted_size").get<std::string>()),
                meta.at("t_intersecting_expected").get<bool>(),
                std::nullopt};
            if (j.contains("members")) c.family = family_from_json(j);
            add(c);
        } catch (const Json::exception& e) {
            throw ParseError(std::string("fixture: ") + e.what());
        }
        return csv;
    }

    for (int t = 1; t <= 3; ++t)
        for (int k = t; k <= t + 2; ++k)
            for (int n = 2 * k; n <= 2 * k + 1; ++n) add(star_family(BigInt(n), k, t));
    for (int t = 1; t <= 2; ++t)
        for (int k = t + 1; k <= t + 3; ++k)
            for (int s = 1; s <= 3; ++s)
                for (int n = 2 * k - t + s; n <= 2 * k - t + s + 1; ++n)
                    add(hm_family(BigInt(n), k, t, s));
    for (int t = 1; t <= 3; ++t)
        for (int extra = 1; extra <= 3; ++extra)
            add(near_star_family(BigInt(t + 2 + extra), t, extra));
    for (int depth = 1; depth <= 3; ++depth)
        for (int t = depth; t <= depth + 1; ++t)
            add(relaxed_core_family(BigInt(t + 3), t, depth));
    for (int t = 1; t <= 3; ++t)
        for (int s = 1; s <= 4; ++s) add(kernel_hit_family(BigInt(t + s + 2), t, s));
    for (int s = 1; s <= 3; ++s)
        for (int t = s; t <= 3; ++t) add(deep_kernel_hit_family(BigInt(t + 3), t, s));
    for (int t = 1; t <= 3; ++t)
        for (int s = 1; s <= 6; ++s)
            for (ExtremalCase cs : applicable_cases(t, s, BigInt(t + s + 2)))
                add(classification_family(cs, t, s, BigInt(t + s + 2)));
    return csv;
}

std::string verify_inequalities(const VerifyArgs& a, bool& failed) {
    SweepGrid grid;
    grid.t_min = a.t_min;
    grid.t_max = a.t_max;
    grid.span_min = a.span_min;
    grid.span_max = a.span_max;
    grid.s_min = a.s_min;
    grid.s_max = a.s_max;
    grid.n_offsets = a.n_offsets;
    const BoundSweepReport report = sweep_inequalities(grid);
    if (!report.failures().empty()) failed = true;
    return sweep_report_to_csv(report);
}

std::string verify_cases(const VerifyArgs& a, bool& failed) {
    std::vector<ClassificationVerdict> rows;
    std::vector<std::string> skipped;
    for (int t = a.t_min; t <= a.t_max; ++t)
        for (int s = a.s_min; s <= a.s_max; ++s)
            for (int off : a.n_offsets) {
                const int n = t + s + 2 + off;
                SearchConfig base;
                base.vertex_cap = a.vertex_cap;
                try {
                    rows.push_back(verify_classification(t, s, n, base));
                    if (!rows.back().confirmed()) failed = true;
                } catch (const LimitError& e) {
                    skipped.push_back("# skipped t=" + std::to_string(t) +
                                      " s=" + std::to_string(s) + " n=" + std::to_string(n) +
                                      ": " + e.what());
                }
            }
    std::string csv = verdicts_to_csv(rows);
    for (const std::string& line : skipped) csv += line + "\n";
    return csv;
}

int run_verify(const VerifyArgs& a) {
    bool failed = false;
    std::string out;
    if (a.suite == "inequalities") {
        out = verify_inequalities(a, failed);
    } else if (a.suite == "classification") {
        out = verify_cases(a, failed);
    } else if (a.suite == "constructions") {
        out = verify_constructions(a, failed);
    } else if (a.suite == "all") {
        out = "# suite: inequalities\n" + verify_inequalities(a, failed);
        out += "# suite: classification\n" + verify_cases(a, failed);
        out += "# suite: constructions\n" + verify_constructions(a, failed);
    } else {
        throw ParseError("unknown suite: " + a.suite);
    }

    const Json config = {{"suite", a.suite},     {"t_min", a.t_min},
                         {"t_max", a.t_max},     {"span_min", a.span_min},
                         {"span_max", a.span_max}, {"s_min", a.s_min},
                         {"s_max", a.s_max},     {"n_offsets", a.n_offsets},
                         {"vertex_cap", a.vertex_cap},
                         {"fixture", a.fixture}};
    emit(a.csv_out, out, config);
    return failed ? exit_property_failure : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    g_start = std::chrono::steady_clock::now();
    for (int i = 0; i < argc; ++i) {
        if (i) g_command_line += ' ';
        g_command_line += argv[i];
    }

    CLI::App app{"Exact toolkit for families of k-sets with bounded pairwise defect"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check", "Report the intersection properties of a family JSON file.\n"
                 "Exit 0 iff the family has max defect <= s at threshold t.");
    check->add_option("--family", check_args.family_path, "family JSON file")
        ->required()
        ->envname("KNS_FAMILY");
    check->add_option("--t", check_args.t, "intersection threshold")
        ->required()
        ->envname("KNS_T");
    check->add_option("--s", check_args.s, "defect cap")->envname("KNS_S");
    check->add_option("--json-out", check_args.json_out, "write the JSON report here");

    ConstructArgs con_args;
    auto* con = app.add_subcommand(
        "construct", "Materialize a named construction as family JSON with size and\n"
                     "defect metadata.  Ids: star, hm, near_star, relaxed_core,\n"
                     "kernel_hit, deep_kernel_hit, c1..c7.");
    con->add_option("--id", con_args.id, "construction id")->required();
    con->add_option("--n", con_args.n_text, "ground-set size (BigInt)")
        ->required()
        ->envname("KNS_N");
    con->add_option("--k", con_args.k, "member size")->envname("KNS_K");
    con->add_option("--t", con_args.t, "intersection threshold")->envname("KNS_T");
    con->add_option("--s", con_args.s, "defect cap")->envname("KNS_S");
    con->add_option("--extra", con_args.extra, "near_star widening (1..3)");
    con->add_option("--depth", con_args.depth, "relaxed_core depth (1..3)");
    con->add_option("--a-seed", con_args.a_seed, "nonzero: sample the A block")
        ->envname("KNS_A_SEED");
    con->add_option("--b-seed", con_args.b_seed, "nonzero: shuffle the B block")
        ->envname("KNS_B_SEED");
    con->add_flag("--with-checks", con_args.with_checks,
                  "re-derive size/defect/intersection claims; exit 1 on mismatch");
    con->add_option("--json-out", con_args.json_out, "write the construction here");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand(
        "eval", "Evaluate a bound function exactly.  Usage: eval f|g|h n k t s [x].\n"
                "n and x accept ranges a..b or a..b..step; any range switches to\n"
                "CSV output with header which,n,k,t,s,x,value.");
    eval->add_option("which", eval_args.which, "f, g, or h")->required();
    eval->add_option("params", eval_args.params, "n k t s [x]")->expected(4, 5);
    eval->add_option("--csv-out", eval_args.csv_out, "write values here");

    SearchArgs search_args;
    auto* search = app.add_subcommand(
        "search", "Exact branch-and-bound maximum family size.  Exit 3 when a node\n"
                  "or time limit stopped the proof of optimality.");
    search->add_option("--n", search_args.n_text, "ground-set size")
        ->required()
        ->envname("KNS_N");
    search->add_option("--k", search_args.k, "member size")->required()->envname("KNS_K");
    search->add_option("--t", search_args.t, "intersection threshold")
        ->required()
        ->envname("KNS_T");
    search->add_option("--s", search_args.s, "defect cap")->envname("KNS_S");
    search->add_flag("--not-t-intersecting", search_args.not_t_intersecting,
                     "restrict to families that are not t-intersecting");
    search->add_flag("--all-extremal", search_args.all_extremal,
                     "collect every maximum family, not just one");
    search->add_flag("--include-families", search_args.include_families,
                     "list extremal members in the JSON output");
    search->add_option("--node-limit", search_args.node_limit, "search node budget")
        ->envname("KNS_NODE_LIMIT");
    search->add_option("--time-limit-ms", search_args.time_limit_ms,
                       "wall-clock budget, 0 = unlimited")
        ->envname("KNS_TIME_LIMIT_MS");
    search->add_option("--vertex-cap", search_args.vertex_cap,
                       "refuse instances with more candidate members than this")
        ->envname("KNS_VERTEX_CAP");
    search->add_option("--extremal-cap", search_args.extremal_cap,
                       "stop collecting extremal families past this count");
    search->add_option("--json-out", search_args.json_out, "write the result here");

    CanonArgs canon_args;
    auto* canon = app.add_subcommand(
        "canon", "Print the relabeling-invariant canonical form of a family as a\n"
                 "dot-separated hex string (same shape over any ground set compares\n"
                 "equal).");
    canon->add_option("--family", canon_args.family_path, "family JSON file")
        ->required()
        ->envname("KNS_FAMILY");
    canon->add_option("--json-out", canon_args.json_out, "write form fields here");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "Run a verification suite and emit one CSV row per check.\n"
                  "Suites: inequalities (header check,t,k,s,n,i,j,x,outcome),\n"
                  "classification (header t,s,n,vertices,max_size,expected_size,\n"
                  "classes,matched,unmatched,exhausted), constructions (header\n"
                  "id,n,k,t,s,size,materialized,size_ok,defect_ok,intersecting_ok,\n"
                  "pass), or all.  Infeasible grid points appear as trailing\n"
                  "'# skipped ...' lines.  Exit 0 iff nothing failed.");
    verify->add_option("--suite", verify_args.suite,
                       "inequalities | classification | constructions | all")
        ->required();
    verify->add_option("--t-min", verify_args.t_min, "smallest t");
    verify->add_option("--t-max", verify_args.t_max, "largest t");
    verify->add_option("--span-min", verify_args.span_min, "smallest k-t");
    verify->add_option("--span-max", verify_args.span_max, "largest k-t");
    verify->add_option("--s-min", verify_args.s_min, "smallest s");
    verify->add_option("--s-max", verify_args.s_max, "largest s");
    verify->add_option("--n-offset", verify_args.n_offsets,
                       "offsets above each check's minimal legal n (default 0,1,7)")
        ->delimiter(',');
    verify->add_option("--vertex-cap", verify_args.vertex_cap,
                       "classification points above this candidate count are skipped")
        ->envname("KNS_VERTEX_CAP");
    verify->add_option("--fixture", verify_args.fixture,
                       "constructions suite: self-check this construction JSON "
                       "instead of the built-in grid");
    verify->add_option("--csv-out", verify_args.csv_out, "write the CSV here");

    try {
        app.parse(argc, argv);
        if (verify_args.n_offsets.empty()) verify_args.n_offsets = {0, 1, 7};
        if (check->parsed()) return run_check(check_args);
        if (con->parsed()) return run_construct(con_args);
        if (eval->parsed()) return run_eval(eval_args);
        if (search->parsed()) return run_search(search_args);
        if (canon->parsed()) return run_canon(canon_args);
        if (verify->parsed()) return run_verify(verify_args);
        return exit_input_error;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    } catch (const LimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource_limit;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const ParamError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}
