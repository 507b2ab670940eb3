#include "kns/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace kns {

BigInt binomial(const BigInt& n, int r) {
    if (r < 0) throw ParamError("binomial: negative r");
    if (n < 0) return 0;
    if (n < r) return 0;
    BigInt result = 1;
    // n-r+1, ..., n divided by 1, ..., r; each prefix product is divisible.
    for (int i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) throw ParamError("ipow: negative exponent");
    BigInt result = 1;
    BigInt b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

KSubset::KSubset(std::uint64_t bits, int n) : bits(bits), n(n) {
    if (n < 0 || n > max_ground_size)
        throw ParamError("KSubset: ground set size out of range");
    if ((bits & ~full_mask(n)) != 0)
        throw ParamError("KSubset: elements beyond ground set");
}

KSubset KSubset::of(std::initializer_list<int> elements, int n) {
    return of(std::vector<int>(elements), n);
}

KSubset KSubset::of(const std::vector<int>& elements, int n) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw ParamError("KSubset: element " + std::to_string(e) +
                             " outside [1," + std::to_string(n) + "]");
        bits |= 1ull << (e - 1);
    }
    return KSubset(bits, n);
}

int KSubset::count() const noexcept { return std::popcount(bits); }

bool KSubset::contains(int element) const noexcept {
    return element >= 1 && element <= n && (bits >> (element - 1)) & 1;
}

bool KSubset::subset_of(const KSubset& other) const noexcept {
    return (bits & ~other.bits) == 0;
}

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

int intersection_size(const KSubset& a, const KSubset& b) {
    if (a.n != b.n) throw ParamError("intersection_size: mismatched ground sets");
    return std::popcount(a.bits & b.bits);
}

Family::Family(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > max_ground_size) throw ParamError("Family: n out of range");
    if (k < 1 || k > n) throw ParamError("Family: k out of range");
}

Family Family::of(int n, int k, std::vector<KSubset> members) {
    Family f(n, k);
    for (const KSubset& m : members) {
        if (m.n != n) throw ParamError("Family: member over wrong ground set");
        if (m.count() != k) throw ParamError("Family: member is not a k-subset");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    f.members_ = std::move(members);
    return f;
}

bool Family::contains(const KSubset& m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

KSubset Family::support() const {
    std::uint64_t bits = 0;
    for (const KSubset& m : members_) bits |= m.bits;
    return KSubset(bits, n_);
}

Family apply_permutation(const Family& f, const std::vector<int>& perm) {
    const int n = f.n();
    if (static_cast<int>(perm.size()) != n)
        throw ParamError("apply_permutation: permutation length != n");
    std::uint64_t seen = 0;
    for (int image : perm) {
        if (image < 1 || image > n)
            throw ParamError("apply_permutation: image outside [1,n]");
        seen |= 1ull << (image - 1);
    }
    if (seen != full_mask(n))
        throw ParamError("apply_permutation: not a bijection");

    std::vector<KSubset> mapped;
    mapped.reserve(f.size());
    for (const KSubset& m : f.members()) {
        std::uint64_t bits = 0;
        for (std::uint64_t rest = m.bits; rest != 0; rest &= rest - 1)
            bits |= 1ull << (perm[std::countr_zero(rest)] - 1);
        mapped.emplace_back(bits, n);
    }
    return Family::of(n, f.k(), std::move(mapped));
}

namespace {

// Next bit pattern with the same popcount (Gosper).
std::uint64_t next_pattern(std::uint64_t v) {
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

} // namespace

KSubsetRange::iterator& KSubsetRange::iterator::operator++() {
    --remaining_;
    if (remaining_ > 0) bits_ = next_pattern(bits_);
    return *this;
}

KSubsetRange::KSubsetRange(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > max_ground_size) throw ParamError("enumerate_k_subsets: n out of range");
    if (k < 1 || k > n) throw ParamError("enumerate_k_subsets: k out of range");
    count_ = binomial(BigInt(n), k).convert_to<unsigned long long>();
}

KSubsetRange::iterator KSubsetRange::begin() const {
    return iterator(full_mask(k_), count_, n_);
}

std::vector<KSubset> all_k_subsets(int n, int k) {
    KSubsetRange range(n, k);
    std::vector<KSubset> out;
    out.reserve(range.count());
    for (KSubset m : range) out.push_back(m);
    return out;
}

Params::Params(BigInt n_in, int k, int t, int s) : n(std::move(n_in)), k(k), t(t), s(s) {
    if (t < 1) throw ParamError("Params: t must be >= 1");
    if (k < t) throw ParamError("Params: k must be >= t");
    if (n < k) throw ParamError("Params: n must be >= k");
    if (s < 0) throw ParamError("Params: s must be >= 0");
}

bool Params::meets_star_threshold() const {
    if (k < t + 1) return false;
    const BigInt span = k - t + 1;
    return n >= 2 * (t + 1) * (span * span + s);
}

bool Params::meets_hm_threshold() const {
    if (k < t + 2) return false;
    const BigInt span = k - t + 1;
    // Threshold multiplier is max(C(t+2,2), (k-t)/2); compare doubled to
    // stay in integers.
    const BigInt doubled = std::max(BigInt((t + 2) * (t + 1)), BigInt(k - t));
    return 2 * n >= 3 * doubled * (span * span + s);
}

bool Params::meets_classification_threshold() const {
    return k == t + 1 && n >= t + s + 2;
}

std::optional<int> Params::small_n() const {
    if (n > max_ground_size) return std::nullopt;
    return n.convert_to<int>();
}

} // namespace kns
