#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <random>

#include "kns/constructions.hpp"
#include "kns/formulas.hpp"
#include "oracles.hpp"

using namespace kns;

namespace {

// Members containing [t] and meeting [k+1] in at least t+1 elements, counted
// one subset at a time.  Independent of the closed-form binomial sum.
BigInt count_core_window_sets(int n, int k, int t) {
    const std::uint64_t core = full_mask(t);
    const std::uint64_t window = full_mask(k + 1);
    BigInt count = 0;
    for (const KSubset& f : KSubsetRange(n, k)) {
        if ((f.bits & core) != core) continue;
        if (std::popcount(f.bits & window) >= t + 1) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("eval_f matches hand-computed values") {
    CHECK(eval_f(BigInt(20), 4, 2, 1, 3) == 156);
    // x = t gives the star size: no branching has happened yet.
    CHECK(eval_f(BigInt(20), 4, 2, 1, 2) == binomial(BigInt(18), 2));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int t = std::uniform_int_distribution<int>(1, 4)(rng);
        const int k = std::uniform_int_distribution<int>(t, t + 5)(rng);
        const int n = std::uniform_int_distribution<int>(2 * k, 6 * k)(rng);
        const int s = std::uniform_int_distribution<int>(0, 5)(rng);
        CHECK(eval_f(BigInt(n), k, t, s, t) == binomial(BigInt(n - t), k - t));
    }
    // Past x = k the enumeration term vanishes; with s = 0 nothing remains.
    CHECK(eval_f(BigInt(10), 3, 1, 0, 5) == 0);
    CHECK_THROWS_AS(eval_f(BigInt(10), 3, 2, 1, 1), ParamError);
    CHECK_THROWS_AS(eval_f(BigInt(0), 3, 1, 1, 2), ParamError);
    CHECK_THROWS_AS(eval_f(BigInt(10), 3, 1, -1, 2), ParamError);
}

TEST_CASE("eval_g matches hand-computed values") {
    CHECK(eval_g(BigInt(30), 5, 2, 1, 4) == 1070);
    // At x = t the first term drops out.
    CHECK(eval_g(BigInt(12), 4, 2, 0, 2) ==
          3 * 3 * binomial(BigInt(8), 0) + 2 * 2 * binomial(BigInt(10), 2));
    CHECK_THROWS_AS(eval_g(BigInt(10), 3, 2, 1, 1), ParamError);
}

TEST_CASE("eval_h matches hand-computed values and direct enumeration") {
    CHECK(eval_h(BigInt(7), 3, 1, 1) == 14);
    CHECK(eval_h(BigInt(12), 4, 2, 3) == 29);
    for (int n = 5; n <= 12; ++n)
        for (int k = 2; k <= 5 && k < n; ++k)
            for (int t = 1; t < k; ++t)
                for (int s = 1; s <= 3; ++s) {
                    if (n < 2 * k - t + s) continue;
                    CHECK(eval_h(BigInt(n), k, t, s) ==
                          count_core_window_sets(n, k, t) + s + std::min(t, s));
                }
    // Hypothesis boundary: n = 2k-t+s is legal, one below throws.
    CHECK_NOTHROW(eval_h(BigInt(8), 3, 1, 3));
    CHECK_THROWS_AS(eval_h(BigInt(7), 3, 1, 3), ParamError);
    CHECK_THROWS_AS(eval_h(BigInt(10), 2, 2, 1), ParamError);
    CHECK(eval_h_raw(BigInt(7), 3, 1, 3) == eval_h(BigInt(8), 3, 1, 3) - 3);
}

TEST_CASE("check_ratio_bound") {
    // Smallest legal n for k = 2, t = 1 is 8.
    CHECK(check_ratio_bound(BigInt(8), 2, 1, 1, 2) == CheckOutcome::holds);
    CHECK(check_ratio_bound(BigInt(7), 2, 1, 1, 2) == CheckOutcome::skipped);
    CHECK(check_ratio_bound(BigInt(8), 2, 1, 2, 1) == CheckOutcome::skipped);
    CHECK(check_ratio_bound(BigInt(100), 2, 2, 1, 1) == CheckOutcome::skipped);
    // i = j is equality, j > k makes the left side vanish.
    CHECK(check_ratio_bound(BigInt(20), 3, 1, 2, 2) == CheckOutcome::holds);
    CHECK(check_ratio_bound(BigInt(20), 3, 1, 1, 5) == CheckOutcome::holds);

    for (int t = 1; t <= 3; ++t)
        for (int k = t + 1; k <= t + 5; ++k) {
            const BigInt base = min_legal_n("ratio_bound", k, t, 0);
            for (const BigInt& n : {base, BigInt(base + 13), BigInt(base * 10)})
                for (int i = t; i <= k + 1; ++i)
                    for (int j = i; j <= k + 1; ++j)
                        CHECK(check_ratio_bound(n, k, t, i, j) == CheckOutcome::holds);
        }
}

TEST_CASE("check_f_decreasing") {
    // k = t+2 compares the two points t+1 and t+2 once.
    const BoundSweepReport at_min = check_f_decreasing(BigInt(40), 3, 1, 1);
    REQUIRE(at_min.rows.size() == 1);
    CHECK(at_min.rows[0].x == 2);
    CHECK(at_min.rows[0].outcome == CheckOutcome::holds);
    CHECK(at_min.all_hold());
    CHECK(eval_f(BigInt(40), 3, 1, 1, 2) == 230);
    CHECK(eval_f(BigInt(40), 3, 1, 1, 3) == 39);

    // Below the threshold n = 40 the report is a single skipped row.
    const BoundSweepReport below = check_f_decreasing(BigInt(39), 3, 1, 1);
    REQUIRE(below.rows.size() == 1);
    CHECK(below.rows[0].outcome == CheckOutcome::skipped);
    CHECK(below.rows[0].x == -1);
    CHECK(below.checked() == 0);
    CHECK(below.all_hold());  // nothing evaluated, nothing violated

    for (int t = 1; t <= 3; ++t)
        for (int k = t + 2; k <= t + 6; ++k)
            for (int s = 1; s <= 4; ++s) {
                const BigInt base = min_legal_n("f_decreasing", k, t, s);
                for (const BigInt& n : {base, BigInt(base + 100)}) {
                    const BoundSweepReport report = check_f_decreasing(n, k, t, s);
                    CHECK(report.rows.size() == static_cast<std::size_t>(k - 1 - t));
                    CHECK(report.checked() == report.rows.size());
                    CHECK(report.all_hold());
                }
            }
}

TEST_CASE("check_g_increasing") {
    const BoundSweepReport at_min = check_g_increasing(BigInt(153), 4, 1, 1);
    REQUIRE(at_min.rows.size() == 1);
    CHECK(at_min.rows[0].x == 3);
    CHECK(at_min.rows[0].outcome == CheckOutcome::holds);

    // k = t+2 leaves no comparison points, so the hypothesis check rejects.
    const BoundSweepReport narrow = check_g_increasing(BigInt(1000), 3, 1, 1);
    REQUIRE(narrow.rows.size() == 1);
    CHECK(narrow.rows[0].outcome == CheckOutcome::skipped);

    for (int t = 1; t <= 3; ++t)
        for (int k = t + 3; k <= t + 6; ++k)
            for (int s = 1; s <= 4; ++s) {
                const BigInt base = min_legal_n("g_increasing", k, t, s);
                for (const BigInt& n : {base, BigInt(base + 100)}) {
                    const BoundSweepReport report = check_g_increasing(n, k, t, s);
                    CHECK(report.rows.size() == static_cast<std::size_t>(k - 2 - t));
                    CHECK(report.checked() == report.rows.size());
                    CHECK(report.all_hold());
                }
            }
}

TEST_CASE("check_h_lower_bound") {
    // t = 1, k = 3, s = 1: threshold n = 90, where h = 263 against mid = 261.
    CHECK(eval_h(BigInt(90), 3, 1, 1) == 263);
    CHECK(check_h_lower_bound(BigInt(90), 3, 1, 1) == CheckOutcome::holds);
    CHECK(check_h_lower_bound(BigInt(89), 3, 1, 1) == CheckOutcome::skipped);
    CHECK(check_h_lower_bound(BigInt(1000), 2, 1, 1) == CheckOutcome::skipped);

    for (int t = 1; t <= 3; ++t)
        for (int k = t + 2; k <= t + 6; ++k)
            for (int s = 1; s <= 4; ++s) {
                const BigInt base = min_legal_n("h_lower_bound", k, t, s);
                for (const BigInt& n : {base, BigInt(base + 1), BigInt(base + 100)})
                    CHECK(check_h_lower_bound(n, k, t, s) == CheckOutcome::holds);
            }
}

TEST_CASE("min_legal_n") {
    CHECK(min_legal_n("ratio_bound", 3, 1, 0) == 18);
    CHECK(min_legal_n("f_decreasing", 3, 1, 1) == 40);
    CHECK(min_legal_n("g_increasing", 4, 1, 1) == 153);
    CHECK(min_legal_n("h_lower_bound", 3, 1, 1) == 90);
    CHECK_THROWS_AS(min_legal_n("no_such_check", 3, 1, 1), ParamError);
}

TEST_CASE("sweep_inequalities: single-point grid has a predictable shape") {
    SweepGrid grid;
    grid.t_min = grid.t_max = 1;
    grid.span_min = grid.span_max = 2;
    grid.s_min = grid.s_max = 1;
    grid.n_offsets = {0};
    const BoundSweepReport report = sweep_inequalities(grid);
    // Ratio rows: pairs t <= i <= j <= k+2 over five values.  One f row, one
    // skipped g row (k = t+2 has no comparison points), one h row.
    CHECK(report.rows.size() == 15 + 3);
    CHECK(report.checked() == 17);
    CHECK(report.skipped() == 1);
    CHECK(report.all_hold());
}

TEST_CASE("sweep_inequalities: default grid holds everywhere") {
    const BoundSweepReport report = sweep_inequalities();
    CHECK(report.checked() > 1000);
    CHECK(report.failures().empty());
    for (const SweepRow& row : report.rows)
        if (row.check == "g_increasing" && row.outcome == CheckOutcome::skipped)
            CHECK(row.k - row.t == 2);
}

TEST_CASE("merge concatenates reports") {
    BoundSweepReport a = check_f_decreasing(BigInt(40), 3, 1, 1);
    BoundSweepReport b = check_g_increasing(BigInt(153), 4, 1, 1);
    const std::size_t total = a.rows.size() + b.rows.size();
    a.merge(std::move(b));
    CHECK(a.rows.size() == total);
    CHECK(a.all_hold());
}
