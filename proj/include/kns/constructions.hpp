#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kns/core.hpp"

namespace kns {

/// A construction together with its exact predicted size.  The family is
/// materialized when the ground set fits (n <= 64) and the member count
/// stays under the materialization cap; otherwise only the size is
/// reported.  Members always use the ambient ground set [n], so the same
/// shape embeds into any large enough n.
struct NamedConstruction {
    std::string id;
    Params params;
    BigInt predicted_size;
    bool t_intersecting_expected = false;
    std::optional<Family> family;
};

inline constexpr std::size_t default_materialize_cap = std::size_t{1} << 22;

/// The t-star {F : [t] subset F}, size C(n-t, k-t).  t-intersecting.
NamedConstruction star_family(const BigInt& n, int k, int t);

/// Augmented star: the members containing [t] that meet [k+1] in at least
/// t+1 elements, plus s members A with A intersect [k+1] = [t], plus
/// min(t,s) members of C([k+1], k) not containing [t].  Size h(n,k,t,s);
/// max defect exactly s; not t-intersecting.  The A and B blocks default to
/// the lexicographically first choices; nonzero seeds pick uniformly at
/// random (deterministic per seed).  Requires k >= t+1, n >= 2k-t+s, s >= 1.
NamedConstruction hm_family(const BigInt& n, int k, int t, int s,
                            std::uint64_t a_seed = 0, std::uint64_t b_seed = 0);

/// {F in C([t+2+extra], t+1) : [t-1] subset F} for extra in {1,2,3}.
/// Size C(extra+3, 2); max defect exactly extra(extra+1)/2.
NamedConstruction near_star_family(const BigInt& n, int t, int extra);

/// {F in C([t+3], t+1) : [t-depth] subset F} for depth in {1,2,3} (needs
/// t >= depth).  Size C(depth+3, 2); max defect exactly depth(depth+1)/2.
NamedConstruction relaxed_core_family(const BigInt& n, int t, int depth);

/// {F in C([t+s+2], t+1) : [t-1] subset F, |F intersect [t+1]| >= t}.
/// Size 2s+3; max defect exactly s.
NamedConstruction kernel_hit_family(const BigInt& n, int t, int s);

/// {F in C([t+3], t+1) : [t-s] subset F, |F intersect [t+1]| >= t} (needs
/// t >= s).  Size 2s+3; max defect exactly s.
NamedConstruction deep_kernel_hit_family(const BigInt& n, int t, int s);

/// The seven shapes that exhaust the maximum families with k = t+1 that are
/// not t-intersecting (for n >= t+s+2):
///   c1 (s=1):            near_star extra 1      size 6
///   c2 (s=3):            near_star extra 2      size 10
///   c3 (s=3, t>=2):      relaxed_core depth 2   size 10
///   c4 (s=6):            near_star extra 3      size 15
///   c5 (s=6, t>=3):      relaxed_core depth 3   size 15
///   c6 (s not 1 or 3):   kernel_hit             size 2s+3
///   c7 (s not 1 or 3, t>=s): deep_kernel_hit    size 2s+3
enum class ExtremalCase { c1, c2, c3, c4, c5, c6, c7 };

const char* to_string(ExtremalCase c);
std::vector<ExtremalCase> all_cases();

/// Side conditions of a case at (t, s) plus enough room in [n].
bool case_applies(ExtremalCase c, int t, int s, const BigInt& n);
std::vector<ExtremalCase> applicable_cases(int t, int s, const BigInt& n);

/// Builds the case family; throws ParamError when the case does not apply.
NamedConstruction classification_family(ExtremalCase c, int t, int s, const BigInt& n);

/// Common size of every applicable case: 2s+4 for s in {1,3}, else 2s+3.
BigInt classification_size(int s);

/// Re-derives a construction's claims from its materialized members.
struct ConstructionCheck {
    std::string id;
    bool materialized = false;
    bool size_ok = false;
    bool defect_ok = false;        // max defect <= declared s
    bool intersecting_ok = false;  // t-intersecting iff expected
    bool pass() const { return !materialized || (size_ok && defect_ok && intersecting_ok); }
};

ConstructionCheck self_check(const NamedConstruction& c);

} // namespace kns
