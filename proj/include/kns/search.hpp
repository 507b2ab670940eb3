#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "kns/constructions.hpp"
#include "kns/core.hpp"

namespace kns {

/// Exact maximum-family search configuration.  The ground set must fit the
/// vertex cap: the search enumerates all C(n,k) candidate members.
struct SearchConfig {
    Params params{BigInt(2), 1, 1, 0};
    bool require_not_t_intersecting = false;
    bool collect_all_extremal = false;
    std::uint64_t node_limit = 100'000'000;
    std::chrono::milliseconds time_limit{0};  // zero means unlimited
    int vertex_cap = 40;                      // refusal above; hard ceiling 64
    std::size_t extremal_cap = 100'000;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double wall_ms = 0.0;
};

/// Relabeling-invariant fingerprint of a family: the minimum serialization
/// of the support relabeled to an initial segment, taken over the
/// structure-respecting bijections.  Ambient ground set size is ignored, so
/// embeddings of one shape into different [n] compare equal.
struct CanonicalForm {
    std::vector<std::uint64_t> words;  // k, support size, member count, members
    std::string hex() const;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Largest family size attainable under the defect cap, found by exhaustive
/// branch and bound over candidate members in bit-pattern order (include
/// branch first).  Every reported family realizes max_size; exhausted is
/// false when a node or time limit stopped the proof of optimality.
struct SearchResult {
    int max_size = 0;
    std::vector<Family> extremal;
    std::vector<CanonicalForm> canonical_classes;
    bool canonical_available = true;
    SearchStats stats;
    bool exhausted = false;
    bool extremal_truncated = false;
};

SearchResult max_family(const SearchConfig& cfg);

inline constexpr int canon_support_cap = 12;

/// Throws LimitError when the support exceeds canon_support_cap.
CanonicalForm canonicalize(const Family& f);

/// Reconstructs a family over the relabeled support from a canonical form.
Family decode_canonical(const CanonicalForm& form);

/// Outcome of checking the k = t+1 classification at one parameter point:
/// the exact search's extremal classes matched against the applicable case
/// shapes.  confirmed() requires an exhausted search, the predicted size and
/// no unmatched class.
struct ClassificationVerdict {
    int t = 0;
    int s = 0;
    int n = 0;
    int vertices = 0;
    int max_size = 0;
    BigInt expected_size;
    bool exhausted = false;
    bool truncated = false;  // extremal collection hit its cap
    std::vector<std::string> matched_cases;     // parallel to classes
    std::vector<CanonicalForm> classes;
    std::size_t unmatched = 0;
    bool confirmed() const;
};

ClassificationVerdict verify_classification(int t, int s, int n, const SearchConfig& base = {});

/// Greedily grows f by bit-pattern order until no further member keeps the
/// max defect within s.  The result contains f and is maximal.
Family extend_to_maximal(const Family& f, int t, int s);

/// For a maximal family (max defect <= s, k >= t+2, n >= 2k+s) whose
/// covering number is at most k, every two minimum covers must share t
/// elements.  Skipped when the hypothesis fails or the cover list was
/// truncated.
CheckOutcome check_min_covers_intersecting(const Family& f, int t, int s);

} // namespace kns
