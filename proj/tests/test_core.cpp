#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kns/core.hpp"
#include "oracles.hpp"

using namespace kns;

TEST_CASE("binomial matches the Pascal and factorial oracles") {
    CHECK(binomial(BigInt(5), 2) == 10);
    CHECK(binomial(BigInt(3), 5) == 0);
    CHECK(binomial(BigInt(7), 0) == 1);
    CHECK(binomial(BigInt(0), 0) == 1);
    CHECK(binomial(BigInt(52), 5) == 2598960);
    CHECK(binomial(BigInt(52), 5) == oracle::factorial_binomial(52, 5));

    for (int n = 0; n <= 40; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(binomial(BigInt(n), r) == oracle::pascal_binomial(n, r));

    CHECK_THROWS_AS(binomial(BigInt(5), -1), ParamError);
}

TEST_CASE("binomial satisfies the Pascal identity at random large n") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small_n(1, 200);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = small_n(rng);
        const int r = std::uniform_int_distribution<int>(1, n)(rng);
        CHECK(binomial(BigInt(n), r) ==
              binomial(BigInt(n - 1), r) + binomial(BigInt(n - 1), r - 1));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const BigInt n = BigInt(1'000'000'000'000ll) + static_cast<long long>(rng() % 1'000'000);
        const int r = std::uniform_int_distribution<int>(1, 8)(rng);
        CHECK(binomial(n, r) == binomial(n - 1, r) + binomial(n - 1, r - 1));
    }
}

TEST_CASE("ipow") {
    CHECK(ipow(BigInt(3), 0) == 1);
    CHECK(ipow(BigInt(3), 4) == 81);
    CHECK(ipow(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
    CHECK_THROWS_AS(ipow(BigInt(2), -1), ParamError);
}

TEST_CASE("KSubset construction and element access") {
    const KSubset a = KSubset::of({1, 3, 4}, 6);
    CHECK(a.count() == 3);
    CHECK(a.contains(1));
    CHECK(!a.contains(2));
    CHECK(a.elements() == std::vector<int>{1, 3, 4});
    CHECK(a.bits == 0b001101);

    CHECK_THROWS_AS(KSubset::of({0}, 4), ParamError);
    CHECK_THROWS_AS(KSubset::of({5}, 4), ParamError);
    CHECK_THROWS_AS(KSubset(1ull << 10, 4), ParamError);
}

TEST_CASE("intersection_size agrees with the element-list oracle") {
    CHECK(intersection_size(KSubset::of({1, 2}, 5), KSubset::of({2, 3}, 5)) == 1);
    CHECK(intersection_size(KSubset::of({1, 2}, 5), KSubset::of({3, 4}, 5)) == 0);
    CHECK_THROWS_AS(intersection_size(KSubset::of({1}, 4), KSubset::of({1}, 5)), ParamError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 20)(rng);
        const std::uint64_t mask = full_mask(n);
        const KSubset a(rng() & mask, n);
        const KSubset b(rng() & mask, n);
        CHECK(intersection_size(a, b) == oracle::set_intersection_size(a, b));
        CHECK(intersection_size(a, b) == intersection_size(b, a));
        CHECK(intersection_size(a, a) == a.count());
    }
}

TEST_CASE("enumerate_k_subsets yields ascending patterns with the right count") {
    std::vector<KSubset> pairs = all_k_subsets(4, 2);
    REQUIRE(pairs.size() == 6);
    CHECK(pairs.front() == KSubset::of({1, 2}, 4));
    CHECK(pairs.back() == KSubset::of({3, 4}, 4));
    for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1].bits < pairs[i].bits);

    CHECK(all_k_subsets(5, 5).size() == 1);
    CHECK(all_k_subsets(5, 5)[0].bits == full_mask(5));

    for (auto [n, k] : {std::pair{12, 4}, {16, 8}, {20, 10}, {20, 1}, {9, 3}}) {
        unsigned long long seen = 0;
        for (KSubset m : enumerate_k_subsets(n, k)) {
            CHECK(m.count() == k);
            ++seen;
        }
        CHECK(BigInt(seen) == binomial(BigInt(n), k));
    }

    CHECK_THROWS_AS(enumerate_k_subsets(4, 5), ParamError);
    CHECK_THROWS_AS(enumerate_k_subsets(0, 0), ParamError);
    CHECK_THROWS_AS(enumerate_k_subsets(65, 2), ParamError);
}

TEST_CASE("Family normalizes, deduplicates and validates members") {
    const Family f = Family::of(5, 2, {KSubset::of({3, 4}, 5), KSubset::of({1, 2}, 5),
                                       KSubset::of({3, 4}, 5)});
    REQUIRE(f.size() == 2);
    CHECK(f[0] == KSubset::of({1, 2}, 5));
    CHECK(f[1] == KSubset::of({3, 4}, 5));
    CHECK(f.contains(KSubset::of({3, 4}, 5)));
    CHECK(!f.contains(KSubset::of({1, 3}, 5)));
    CHECK(f.support() == KSubset::of({1, 2, 3, 4}, 5));

    CHECK_THROWS_AS(Family::of(5, 2, {KSubset::of({1, 2, 3}, 5)}), ParamError);
    CHECK_THROWS_AS(Family::of(5, 2, {KSubset::of({1, 2}, 4)}), ParamError);
    CHECK_THROWS_AS(Family(65, 2), ParamError);
    CHECK_THROWS_AS(Family(4, 5), ParamError);
}

TEST_CASE("apply_permutation relabels and preserves structure") {
    const Family f = Family::of(4, 2, {KSubset::of({1, 2}, 4), KSubset::of({1, 3}, 4)});
    const Family swapped = apply_permutation(f, {2, 1, 3, 4});
    CHECK(swapped == Family::of(4, 2, {KSubset::of({1, 2}, 4), KSubset::of({2, 3}, 4)}));

    CHECK(apply_permutation(f, {1, 2, 3, 4}) == f);
    CHECK_THROWS_AS(apply_permutation(f, {1, 2, 3}), ParamError);
    CHECK_THROWS_AS(apply_permutation(f, {1, 1, 3, 4}), ParamError);
    CHECK_THROWS_AS(apply_permutation(f, {1, 2, 3, 5}), ParamError);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 10)(rng);
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        const Family g = oracle::random_family(rng, n, k, 0.4);
        const Family h = apply_permutation(g, oracle::random_permutation(rng, n));
        CHECK(h.size() == g.size());
        CHECK(h.k() == g.k());
        // Intersection-size multiset is relabeling-invariant.
        std::vector<int> before, after;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                before.push_back(intersection_size(g[i], g[j]));
                after.push_back(intersection_size(h[i], h[j]));
            }
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
    }
}

TEST_CASE("Params validates and evaluates thresholds") {
    CHECK_THROWS_AS(Params(BigInt(4), 5, 1, 0), ParamError);
    CHECK_THROWS_AS(Params(BigInt(5), 2, 3, 0), ParamError);
    CHECK_THROWS_AS(Params(BigInt(5), 2, 0, 0), ParamError);
    CHECK_THROWS_AS(Params(BigInt(5), 2, 1, -1), ParamError);

    // k=3, t=1, s=1: star threshold is 2*2*(9+1) = 40.
    CHECK(Params(BigInt(40), 3, 1, 1).meets_star_threshold());
    CHECK(!Params(BigInt(39), 3, 1, 1).meets_star_threshold());
    CHECK(!Params(BigInt(1000), 2, 2, 0).meets_star_threshold());  // needs k >= t+1

    // k=3, t=1, s=1: hm threshold is (3/2)*max(6, 2)*(9+1) = 90.
    CHECK(Params(BigInt(90), 3, 1, 1).meets_hm_threshold());
    CHECK(!Params(BigInt(89), 3, 1, 1).meets_hm_threshold());
    CHECK(!Params(BigInt(1000), 2, 1, 1).meets_hm_threshold());  // needs k >= t+2

    CHECK(Params(BigInt(5), 3, 2, 1).meets_classification_threshold());
    CHECK(!Params(BigInt(4), 3, 2, 1).meets_classification_threshold());
    CHECK(!Params(BigInt(20), 4, 2, 1).meets_classification_threshold());  // k != t+1

    CHECK(Params(BigInt(12), 3, 1, 0).small_n() == 12);
    CHECK(!Params(BigInt("100000000000000000000"), 3, 1, 0).small_n().has_value());
}
