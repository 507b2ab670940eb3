#include "kns/constructions.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <utility>

#include "kns/formulas.hpp"
#include "kns/predicates.hpp"

namespace kns {

namespace {

std::vector<int> range_elements(int lo, int hi) {
    std::vector<int> out;
    for (int e = lo; e <= hi; ++e) out.push_back(e);
    return out;
}

std::uint64_t mask_of(std::uint64_t index_bits, const std::vector<int>& universe) {
    std::uint64_t bits = 0;
    for (std::uint64_t rest = index_bits; rest != 0; rest &= rest - 1)
        bits |= 1ull << (universe[std::countr_zero(rest)] - 1);
    return bits;
}

// All r-subsets of the universe as element masks.
std::vector<std::uint64_t> subset_masks(const std::vector<int>& universe, int r) {
    const int m = static_cast<int>(universe.size());
    if (r < 0 || r > m) return {};
    if (r == 0) return {0};
    std::vector<std::uint64_t> out;
    for (KSubset idx : enumerate_k_subsets(m, r)) out.push_back(mask_of(idx.bits, universe));
    return out;
}

// The rank-th r-subset of the universe in element-tuple lexicographic order.
std::uint64_t mask_from_rank(const std::vector<int>& universe, int r, BigInt rank) {
    const int m = static_cast<int>(universe.size());
    std::uint64_t bits = 0;
    int remaining = r;
    for (int pos = 0; pos < m && remaining > 0; ++pos) {
        const BigInt with_pos = binomial(BigInt(m - pos - 1), remaining - 1);
        if (rank < with_pos) {
            bits |= 1ull << (universe[pos] - 1);
            --remaining;
        } else {
            rank -= with_pos;
        }
    }
    return bits;
}

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
    const std::size_t bits = boost::multiprecision::msb(bound) + 1;
    const BigInt mask = (BigInt(1) << bits) - 1;
    for (;;) {
        BigInt v = 0;
        for (std::size_t got = 0; got < bits; got += 64) v = (v << 64) | rng();
        v &= mask;
        if (v < bound) return v;
    }
}

bool materializable(const Params& p, const BigInt& predicted) {
    return p.small_n().has_value() && predicted <= BigInt(default_materialize_cap);
}

} // namespace

NamedConstruction star_family(const BigInt& n, int k, int t) {
    Params params(n, k, t, 0);
    NamedConstruction out{"star", params, binomial(n - t, k - t), true, std::nullopt};
    if (!materializable(params, out.predicted_size)) return out;

    const int nn = *params.small_n();
    const std::uint64_t core = full_mask(t);
    std::vector<KSubset> members;
    for (std::uint64_t tail : subset_masks(range_elements(t + 1, nn), k - t))
        members.emplace_back(core | tail, nn);
    out.family = Family::of(nn, k, std::move(members));
    return out;
}

NamedConstruction hm_family(const BigInt& n, int k, int t, int s,
                            std::uint64_t a_seed, std::uint64_t b_seed) {
    if (t < 1 || k < t + 1) throw ParamError("hm_family: requires k >= t+1");
    if (s < 1) throw ParamError("hm_family: requires s >= 1");
    if (n < 2 * k - t + s) throw ParamError("hm_family: requires n >= 2k-t+s");
    Params params(n, k, t, s);
    NamedConstruction out{"hm", params, eval_h(n, k, t, s), false, std::nullopt};
    if (!materializable(params, out.predicted_size)) return out;

    const int nn = *params.small_n();
    const std::uint64_t core = full_mask(t);
    const std::vector<int> inner = range_elements(t + 1, k + 1);
    const std::vector<int> outer = range_elements(k + 2, nn);

    std::vector<KSubset> members;
    for (int j = t + 1; j <= k; ++j)
        for (std::uint64_t mid : subset_masks(inner, j - t))
            for (std::uint64_t tail : subset_masks(outer, k - j))
                members.emplace_back(core | mid | tail, nn);

    // Block A: s members meeting [k+1] in exactly [t].
    const BigInt candidates = binomial(BigInt(nn - k - 1), k - t);
    std::set<BigInt> ranks;
    if (a_seed == 0) {
        for (int i = 0; i < s; ++i) ranks.insert(i);
    } else {
        std::mt19937_64 rng(a_seed);
        while (static_cast<int>(ranks.size()) < s) ranks.insert(uniform_below(candidates, rng));
    }
    for (const BigInt& rank : ranks)
        members.emplace_back(core | mask_from_rank(outer, k - t, rank), nn);

    // Block B: min(t,s) k-subsets of [k+1] missing an element of [t].
    std::vector<std::uint64_t> drops;
    for (int i = 1; i <= t; ++i) drops.push_back(full_mask(k + 1) & ~(1ull << (i - 1)));
    std::sort(drops.begin(), drops.end());
    const int b_count = std::min(t, s);
    if (b_seed != 0) {
        std::mt19937_64 rng(b_seed);
        std::shuffle(drops.begin(), drops.end(), rng);
    }
    for (int i = 0; i < b_count; ++i) members.emplace_back(drops[i], nn);

    out.family = Family::of(nn, k, std::move(members));
    return out;
}

namespace {

// Shared shape: {F in C([m], t+1) : core subset F (, F meets [t+1] in >= t)}.
NamedConstruction fixed_core_shape(std::string id, const BigInt& n, int t, int core_size,
                                   int ground, int declared_s, BigInt predicted,
                                   bool kernel_constraint) {
    if (n < ground) throw ParamError(id + ": ground set needs " + std::to_string(ground) +
                                     " elements");
    Params params(n, t + 1, t, declared_s);
    NamedConstruction out{std::move(id), params, std::move(predicted), false, std::nullopt};
    if (!materializable(params, out.predicted_size)) return out;

    const int nn = *params.small_n();
    const std::uint64_t core = full_mask(core_size);
    const std::uint64_t kernel = full_mask(t + 1);
    std::vector<KSubset> members;
    for (std::uint64_t free : subset_masks(range_elements(core_size + 1, ground),
                                           t + 1 - core_size)) {
        const std::uint64_t bits = core | free;
        if (kernel_constraint && std::popcount(bits & kernel) < t) continue;
        members.emplace_back(bits, nn);
    }
    out.family = Family::of(nn, t + 1, std::move(members));
    return out;
}

} // namespace

NamedConstruction near_star_family(const BigInt& n, int t, int extra) {
    if (t < 1 || extra < 1 || extra > 3) throw ParamError("near_star_family: extra in {1,2,3}");
    return fixed_core_shape("near_star_" + std::to_string(extra), n, t, t - 1, t + 2 + extra,
                            extra * (extra + 1) / 2, binomial(BigInt(extra + 3), 2), false);
}

NamedConstruction relaxed_core_family(const BigInt& n, int t, int depth) {
    if (depth < 1 || depth > 3) throw ParamError("relaxed_core_family: depth in {1,2,3}");
    if (t < depth) throw ParamError("relaxed_core_family: requires t >= depth");
    return fixed_core_shape("relaxed_core_" + std::to_string(depth), n, t, t - depth, t + 3,
                            depth * (depth + 1) / 2, binomial(BigInt(depth + 3), 2), false);
}

NamedConstruction kernel_hit_family(const BigInt& n, int t, int s) {
    if (t < 1 || s < 1) throw ParamError("kernel_hit_family: requires t, s >= 1");
    return fixed_core_shape("kernel_hit", n, t, t - 1, t + s + 2, s, BigInt(2 * s + 3), true);
}

NamedConstruction deep_kernel_hit_family(const BigInt& n, int t, int s) {
    if (s < 1) throw ParamError("deep_kernel_hit_family: requires s >= 1");
    if (t < s) throw ParamError("deep_kernel_hit_family: requires t >= s");
    return fixed_core_shape("deep_kernel_hit", n, t, t - s, t + 3, s, BigInt(2 * s + 3), true);
}

const char* to_string(ExtremalCase c) {
    switch (c) {
        case ExtremalCase::c1: return "c1";
        case ExtremalCase::c2: return "c2";
        case ExtremalCase::c3: return "c3";
        case ExtremalCase::c4: return "c4";
        case ExtremalCase::c5: return "c5";
        case ExtremalCase::c6: return "c6";
        default: return "c7";
    }
}

std::vector<ExtremalCase> all_cases() {
    return {ExtremalCase::c1, ExtremalCase::c2, ExtremalCase::c3, ExtremalCase::c4,
            ExtremalCase::c5, ExtremalCase::c6, ExtremalCase::c7};
}

bool case_applies(ExtremalCase c, int t, int s, const BigInt& n) {
    if (t < 1 || s < 1) return false;
    switch (c) {
        case ExtremalCase::c1: return s == 1 && n >= t + 3;
        case ExtremalCase::c2: return s == 3 && n >= t + 4;
        case ExtremalCase::c3: return s == 3 && t >= 2 && n >= t + 3;
        case ExtremalCase::c4: return s == 6 && n >= t + 5;
        case ExtremalCase::c5: return s == 6 && t >= 3 && n >= t + 3;
        case ExtremalCase::c6: return s != 1 && s != 3 && n >= t + s + 2;
        default: return s != 1 && s != 3 && t >= s && n >= t + 3;
    }
}

std::vector<ExtremalCase> applicable_cases(int t, int s, const BigInt& n) {
    std::vector<ExtremalCase> out;
    for (ExtremalCase c : all_cases())
        if (case_applies(c, t, s, n)) out.push_back(c);
    return out;
}

NamedConstruction classification_family(ExtremalCase c, int t, int s, const BigInt& n) {
    if (!case_applies(c, t, s, n))
        throw ParamError(std::string("classification_family: case ") + to_string(c) +
                         " does not apply at these parameters");
    NamedConstruction out = [&] {
        switch (c) {
            case ExtremalCase::c1: return near_star_family(n, t, 1);
            case ExtremalCase::c2: return near_star_family(n, t, 2);
            case ExtremalCase::c3: return relaxed_core_family(n, t, 2);
            case ExtremalCase::c4: return near_star_family(n, t, 3);
            case ExtremalCase::c5: return relaxed_core_family(n, t, 3);
            case ExtremalCase::c6: return kernel_hit_family(n, t, s);
            default: return deep_kernel_hit_family(n, t, s);
        }
    }();
    out.id = to_string(c);
    return out;
}

BigInt classification_size(int s) {
    if (s < 1) throw ParamError("classification_size: requires s >= 1");
    return (s == 1 || s == 3) ? BigInt(2 * s + 4) : BigInt(2 * s + 3);
}

ConstructionCheck self_check(const NamedConstruction& c) {
    ConstructionCheck out;
    out.id = c.id;
    if (!c.family) return out;
    out.materialized = true;
    const Family& f = *c.family;
    out.size_ok = BigInt(f.size()) == c.predicted_size;
    out.defect_ok = is_s_almost_t_intersecting(f, c.params.t, c.params.s).first;
    out.intersecting_ok = is_t_intersecting(f, c.params.t) == c.t_intersecting_expected;
    return out;
}

} // namespace kns
