#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "kns/bigint.hpp"
#include "kns/common.hpp"

namespace kns {

/// Ground sets are [n] = {1, ..., n} with n <= 64.
inline constexpr int max_ground_size = 64;

/// Bitmask with the low n bits set.
constexpr std::uint64_t full_mask(int n) {
    return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

/// A subset of [n] packed into one machine word: element i is bit i-1.
/// Membership, intersection and union are single bit operations.
struct KSubset {
    std::uint64_t bits = 0;
    int n = 0;

    KSubset() = default;
    KSubset(std::uint64_t bits, int n);

    static KSubset of(std::initializer_list<int> elements, int n);
    static KSubset of(const std::vector<int>& elements, int n);

    int count() const noexcept;
    bool contains(int element) const noexcept;
    bool subset_of(const KSubset& other) const noexcept;
    std::vector<int> elements() const;

    /// Orders by bit pattern; equality requires the same ground set.
    friend auto operator<=>(const KSubset&, const KSubset&) = default;
};

/// |a intersect b|.  Throws ParamError when the ground sets differ.
int intersection_size(const KSubset& a, const KSubset& b);

/// A k-uniform family over [n]: a set of distinct k-subsets kept sorted
/// ascending by bit pattern.  Equality is structural.
class Family {
public:
    Family() = default;
    Family(int n, int k);

    /// Validates uniformity, sorts and deduplicates.
    static Family of(int n, int k, std::vector<KSubset> members);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<KSubset>& members() const noexcept { return members_; }
    const KSubset& operator[](std::size_t i) const { return members_[i]; }
    bool contains(const KSubset& m) const;

    /// Union of all members.
    KSubset support() const;

    friend bool operator==(const Family&, const Family&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<KSubset> members_;
};

/// Relabels every member through a bijection of [n]; perm[i-1] is the image
/// of element i.  Throws ParamError unless perm is a permutation of [n].
Family apply_permutation(const Family& f, const std::vector<int>& perm);

/// Lazy stream of all k-subsets of [n] in ascending bit-pattern order.
class KSubsetRange {
public:
    class iterator {
    public:
        using value_type = KSubset;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(std::uint64_t bits, unsigned long long remaining, int n)
            : bits_(bits), remaining_(remaining), n_(n) {}

        KSubset operator*() const { return KSubset(bits_, n_); }
        iterator& operator++();
        iterator operator++(int) { auto c = *this; ++*this; return c; }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.remaining_ == b.remaining_;
        }

    private:
        std::uint64_t bits_ = 0;
        unsigned long long remaining_ = 0;
        int n_ = 0;
    };

    /// Throws ParamError unless 1 <= k <= n <= 64.
    KSubsetRange(int n, int k);

    iterator begin() const;
    iterator end() const { return iterator(0, 0, n_); }
    unsigned long long count() const noexcept { return count_; }

private:
    int n_;
    int k_;
    unsigned long long count_;
};

inline KSubsetRange enumerate_k_subsets(int n, int k) { return KSubsetRange(n, k); }

std::vector<KSubset> all_k_subsets(int n, int k);

/// Problem parameters (n, k, t, s) with n >= k >= t >= 1 and s >= 0.
/// n is arbitrary precision: formula evaluation has no ground-set cap.
struct Params {
    BigInt n;
    int k = 1;
    int t = 1;
    int s = 0;

    Params(BigInt n, int k, int t, int s);

    /// n large enough that the t-star is the unique maximum family.
    bool meets_star_threshold() const;
    /// n large enough that the augmented-star family is the maximum among
    /// families that are not t-intersecting (needs k >= t+2).
    bool meets_hm_threshold() const;
    /// k = t+1 and n >= t+s+2: the small-uniformity classification regime.
    bool meets_classification_threshold() const;

    /// n as an int when it fits a 64-element ground set.
    std::optional<int> small_n() const;
};

} // namespace kns
