#pragma once

// Brute-force reference implementations used only by tests.  Each oracle
// recomputes a quantity by the most direct route available, sharing as
// little machinery with the library as possible, so results are checked
// against an independent path.

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "kns/core.hpp"

namespace oracle {

using kns::BigInt;
using kns::Family;
using kns::KSubset;

// Additive Pascal triangle.
inline BigInt pascal_binomial(int n, int r) {
    if (r < 0 || n < 0) return 0;
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return r <= n ? row[r] : BigInt(0);
}

// Factorial quotient.
inline BigInt factorial_binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    auto fact = [](int m) {
        BigInt out = 1;
        for (int i = 2; i <= m; ++i) out *= i;
        return out;
    };
    return fact(n) / (fact(r) * fact(n - r));
}

inline int set_intersection_size(const KSubset& a, const KSubset& b) {
    const std::vector<int> ea = a.elements();
    const std::vector<int> eb = b.elements();
    std::vector<int> common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::back_inserter(common));
    return static_cast<int>(common.size());
}

inline std::vector<int> defect_degrees(const Family& f, int t) {
    std::vector<int> deg(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (set_intersection_size(f[i], f[j]) < t) {
                ++deg[i];
                ++deg[j];
            }
    return deg;
}

inline bool s_almost(const Family& f, int t, int s) {
    for (int d : defect_degrees(f, t))
        if (d > s) return false;
    return true;
}

inline bool t_intersecting(const Family& f, int t) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (set_intersection_size(f[i], f[j]) < t) return false;
    return true;
}

// Minimum t-cover size by scanning all 2^n subsets of the ground set.
inline int covering_number(const Family& f, int t) {
    const int n = f.n();
    int best = n + 1;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (std::popcount(mask) >= best) continue;
        bool covers = true;
        for (const KSubset& m : f.members())
            if (std::popcount(mask & m.bits) < t) {
                covers = false;
                break;
            }
        if (covers) best = std::popcount(mask);
    }
    return best;
}

struct MaxFamilyResult {
    int max_size = 0;
    std::vector<Family> extremal;
};

// Exhaustive maximum over all subfamilies of C([n], k).
inline MaxFamilyResult max_family(int n, int k, int t, int s, bool require_violating) {
    const std::vector<KSubset> verts = kns::all_k_subsets(n, k);
    const int v = static_cast<int>(verts.size());
    std::vector<std::uint64_t> adj(v, 0);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (set_intersection_size(verts[i], verts[j]) < t) {
                adj[i] |= 1ull << j;
                adj[j] |= 1ull << i;
            }

    MaxFamilyResult out;
    int best = require_violating ? -1 : 0;
    std::vector<std::uint64_t> argmax = require_violating
                                            ? std::vector<std::uint64_t>{}
                                            : std::vector<std::uint64_t>{0};
    for (std::uint64_t mask = 1; mask < (1ull << v); ++mask) {
        bool ok = true;
        bool edge = false;
        for (std::uint64_t rest = mask; rest != 0 && ok; rest &= rest - 1) {
            const int d = std::popcount(adj[std::countr_zero(rest)] & mask);
            if (d > s) ok = false;
            if (d > 0) edge = true;
        }
        if (!ok || (require_violating && !edge)) continue;
        const int size = std::popcount(mask);
        if (size > best) {
            best = size;
            argmax.assign(1, mask);
        } else if (size == best) {
            argmax.push_back(mask);
        }
    }
    out.max_size = std::max(best, 0);
    for (std::uint64_t mask : argmax) {
        std::vector<KSubset> members;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            members.push_back(verts[std::countr_zero(rest)]);
        out.extremal.push_back(Family::of(n, k, std::move(members)));
    }
    return out;
}

inline Family random_family(std::mt19937_64& rng, int n, int k, double density) {
    std::bernoulli_distribution pick(density);
    std::vector<KSubset> members;
    for (KSubset m : kns::enumerate_k_subsets(n, k))
        if (pick(rng)) members.push_back(m);
    return Family::of(n, k, std::move(members));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace oracle
