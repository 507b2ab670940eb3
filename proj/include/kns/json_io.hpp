#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "kns/constructions.hpp"
#include "kns/formulas.hpp"
#include "kns/predicates.hpp"
#include "kns/search.hpp"

namespace kns {

/// All emitted JSON keeps insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Family wire format: {"n": .., "k": .., "members": [[..], ..]} with each
/// member sorted ascending and the member list sorted lexicographically.
Json family_to_json(const Family& f);

/// Strict parse of the wire format; unknown keys are ignored.  Throws
/// ParseError on malformed structure, ParamError on out-of-range values.
Family family_from_json(const Json& j);

Family load_family_file(const std::string& path);

Json bigint_to_json(const BigInt& v);
Json params_to_json(const Params& p);

Json defect_report_to_json(const Family& f, const DefectReport& r);
Json cover_to_json(const CoverResult& c);

Json sweep_report_to_json(const BoundSweepReport& r);
std::string sweep_report_to_csv(const BoundSweepReport& r);

Json search_result_to_json(const SearchResult& r, bool include_families);

Json verdict_to_json(const ClassificationVerdict& v);
std::string verdicts_to_csv(const std::vector<ClassificationVerdict>& rows);

Json construction_to_json(const NamedConstruction& c, bool with_checks);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

} // namespace kns
