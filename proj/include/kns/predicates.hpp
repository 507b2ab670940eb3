#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kns/core.hpp"

namespace kns {

/// Every pair of members meets in at least t elements.  Vacuously true for
/// families with fewer than two members.
bool is_t_intersecting(const Family& f, int t);

/// D(h; t): the members F of f with |F intersect h| < t.
Family defect_set(const Family& f, const KSubset& h, int t);

/// Defect degrees of a family at threshold t.  degrees[i] counts the members
/// other than f[i] meeting it in fewer than t elements.
struct DefectReport {
    std::vector<int> degrees;
    int max_defect = 0;
    std::size_t max_index = 0;
    std::vector<KSubset> witnesses;  // defect partners of f[max_index]
};

/// Max defect degree <= s.  The report is returned either way.
std::pair<bool, DefectReport> is_s_almost_t_intersecting(const Family& f, int t, int s);

/// Same property via an explicit graph: vertices are members, edges join
/// pairs meeting in fewer than t elements, and the property is max degree
/// <= s.  Intersections are counted by merging element lists, so this shares
/// no code path with the bitset route above.
bool kneser_edge_check(const Family& f, int t, int s);

/// Members that contain h.
Family restriction(const Family& f, const KSubset& h);

/// |tset intersect F| >= t for every member F.
bool is_t_cover(const KSubset& tset, const Family& f, int t);

inline constexpr std::size_t default_witness_cap = 1000;

/// Covering number and the minimum covers that realize it.
struct CoverResult {
    int tau = 0;
    std::vector<std::vector<int>> witnesses;  // sorted element lists
    bool truncated = false;                   // witness list hit the cap
};

/// Smallest size of a t-cover, found by trying sizes t, t+1, ... over
/// subsets of the support; exhausting size r-1 certifies minimality at r.
/// Throws ParamError for an empty family.
CoverResult covering_number(const Family& f, int t,
                            std::size_t witness_cap = default_witness_cap);

/// Restriction bound: for a family with max defect <= s whose covering
/// number tau lies in [t+1, k] and a set h with |h| < tau,
///   |f restricted to h| <= (k-t+1)^(tau-|h|) C(n-tau, k-tau)
///                          + sum_{i<tau-|h|} s (k-t+1)^i.
/// Needs n >= (t+1)(k-t+1)^2; otherwise skipped.
CheckOutcome check_restriction_bound(const Family& f, int t, int s, const KSubset& h);

/// Size bound for (t+1)-uniform families (max defect <= s, not
/// t-intersecting, n >= t+3): |f| <= 2s+4 when all pairs meet in at least
/// t-1 elements, and |f| <= 2s when some pair meets in at most t-2.
CheckOutcome check_kt1_size_bound(const Family& f, int t, int s);

/// Size bound when the covering number exceeds k (max defect <= s,
/// n >= 2k): |f| <= s * C(2k-2t+2, k-t+1).
CheckOutcome check_cover_excess_bound(const Family& f, int t, int s);

} // namespace kns
