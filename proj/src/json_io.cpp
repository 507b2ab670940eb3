#include "kns/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace kns {

Json family_to_json(const Family& f) {
    std::vector<std::vector<int>> lists;
    lists.reserve(f.size());
    for (const KSubset& m : f.members()) lists.push_back(m.elements());
    std::sort(lists.begin(), lists.end());
    Json j;
    j["n"] = f.n();
    j["k"] = f.k();
    j["members"] = lists;
    return j;
}

Family family_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("family: expected a JSON object");
    if (!j.contains("n") || !j.contains("k") || !j.contains("members"))
        throw ParseError("family: needs keys n, k, members");
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
        throw ParseError("family: n and k must be integers");
    const int n = j["n"].get<int>();
    const int k = j["k"].get<int>();
    if (!j["members"].is_array()) throw ParseError("family: members must be an array");

    std::vector<KSubset> members;
    for (const Json& entry : j["members"]) {
        if (!entry.is_array()) throw ParseError("family: each member must be an array");
        std::vector<int> elements;
        for (const Json& e : entry) {
            if (!e.is_number_integer()) throw ParseError("family: elements must be integers");
            elements.push_back(e.get<int>());
        }
        if (!std::is_sorted(elements.begin(), elements.end()) ||
            std::adjacent_find(elements.begin(), elements.end()) != elements.end())
            throw ParseError("family: member elements must be strictly increasing");
        if (static_cast<int>(elements.size()) != k)
            throw ParseError("family: member size differs from k");
        members.push_back(KSubset::of(elements, n));
    }
    return Family::of(n, k, std::move(members));
}

Family load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return family_from_json(j);
}

Json bigint_to_json(const BigInt& v) { return v.str(); }

Json params_to_json(const Params& p) {
    Json j;
    j["n"] = bigint_to_json(p.n);
    j["k"] = p.k;
    j["t"] = p.t;
    j["s"] = p.s;
    return j;
}

Json defect_report_to_json(const Family& f, const DefectReport& r) {
    Json degrees = Json::array();
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
        Json row;
        row["member"] = f[i].elements();
        row["defect"] = r.degrees[i];
        degrees.push_back(std::move(row));
    }
    Json witnesses = Json::array();
    for (const KSubset& w : r.witnesses) witnesses.push_back(w.elements());
    Json j;
    j["degrees"] = std::move(degrees);
    j["max_defect"] = r.max_defect;
    j["max_member"] = f.empty() ? Json() : Json(f[r.max_index].elements());
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json cover_to_json(const CoverResult& c) {
    Json j;
    j["tau"] = c.tau;
    j["witnesses"] = c.witnesses;
    j["truncated"] = c.truncated;
    return j;
}

namespace {

Json sweep_row_to_json(const SweepRow& r) {
    Json j;
    j["check"] = r.check;
    j["t"] = r.t;
    j["k"] = r.k;
    if (r.s >= 0) j["s"] = r.s;
    j["n"] = bigint_to_json(r.n);
    if (r.i >= 0) j["i"] = r.i;
    if (r.j >= 0) j["j"] = r.j;
    if (r.x >= 0) j["x"] = r.x;
    j["outcome"] = to_string(r.outcome);
    return j;
}

std::string csv_cell(int v) { return v < 0 ? std::string() : std::to_string(v); }

} // namespace

Json sweep_report_to_json(const BoundSweepReport& r) {
    Json rows = Json::array();
    for (const SweepRow& row : r.rows) rows.push_back(sweep_row_to_json(row));
    Json failures = Json::array();
    for (const SweepRow& row : r.failures()) failures.push_back(sweep_row_to_json(row));
    Json j;
    j["checked"] = r.checked();
    j["skipped"] = r.skipped();
    j["failures"] = std::move(failures);
    j["rows"] = std::move(rows);
    return j;
}

std::string sweep_report_to_csv(const BoundSweepReport& r) {
    std::ostringstream out;
    out << "check,t,k,s,n,i,j,x,outcome\n";
    for (const SweepRow& row : r.rows)
        out << row.check << ',' << row.t << ',' << row.k << ',' << csv_cell(row.s) << ','
            << row.n.str() << ',' << csv_cell(row.i) << ',' << csv_cell(row.j) << ','
            << csv_cell(row.x) << ',' << to_string(row.outcome) << '\n';
    return out.str();
}

Json search_result_to_json(const SearchResult& r, bool include_families) {
    Json j;
    j["max_size"] = r.max_size;
    j["exhausted"] = r.exhausted;
    j["extremal_count"] = r.extremal.size();
    j["extremal_truncated"] = r.extremal_truncated;
    j["canonical_available"] = r.canonical_available;
    Json classes = Json::array();
    for (const CanonicalForm& c : r.canonical_classes) classes.push_back(c.hex());
    j["canonical_classes"] = std::move(classes);
    Json stats;
    stats["nodes"] = r.stats.nodes;
    stats["prunes"] = r.stats.prunes;
    stats["wall_ms"] = r.stats.wall_ms;
    j["stats"] = std::move(stats);
    if (include_families) {
        Json fams = Json::array();
        for (const Family& f : r.extremal) fams.push_back(family_to_json(f));
        j["extremal"] = std::move(fams);
    }
    return j;
}

Json verdict_to_json(const ClassificationVerdict& v) {
    Json j;
    j["t"] = v.t;
    j["s"] = v.s;
    j["n"] = v.n;
    j["vertices"] = v.vertices;
    j["max_size"] = v.max_size;
    j["expected_size"] = bigint_to_json(v.expected_size);
    j["exhausted"] = v.exhausted;
    j["truncated"] = v.truncated;
    Json classes = Json::array();
    for (const CanonicalForm& c : v.classes) classes.push_back(c.hex());
    j["classes"] = std::move(classes);
    j["matched_cases"] = v.matched_cases;
    j["unmatched"] = v.unmatched;
    j["confirmed"] = v.confirmed();
    return j;
}

std::string verdicts_to_csv(const std::vector<ClassificationVerdict>& rows) {
    std::ostringstream out;
    out << "t,s,n,vertices,max_size,expected_size,classes,matched,unmatched,exhausted\n";
    for (const ClassificationVerdict& v : rows) {
        out << v.t << ',' << v.s << ',' << v.n << ',' << v.vertices << ',' << v.max_size << ','
            << v.expected_size.str() << ',' << v.classes.size() << ',';
        for (std::size_t i = 0; i < v.matched_cases.size(); ++i) {
            if (i > 0) out << '+';
            out << v.matched_cases[i];
        }
        out << ',' << v.unmatched << ',' << (v.exhausted ? "true" : "false") << '\n';
    }
    return out.str();
}

Json construction_to_json(const NamedConstruction& c, bool with_checks) {
    Json meta;
    meta["id"] = c.id;
    meta["params"] = params_to_json(c.params);
    meta["predicted_size"] = bigint_to_json(c.predicted_size);
    meta["t_intersecting_expected"] = c.t_intersecting_expected;
    meta["materialized"] = c.family.has_value();
    if (c.family && with_checks) {
        const ConstructionCheck check = self_check(c);
        Json checks;
        checks["size_ok"] = check.size_ok;
        checks["defect_ok"] = check.defect_ok;
        checks["intersecting_ok"] = check.intersecting_ok;
        meta["checks"] = std::move(checks);
    }
    Json j = c.family ? family_to_json(*c.family) : Json::object();
    j["meta"] = std::move(meta);
    return j;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view data) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
    return out.str();
}

} // namespace kns
