#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kns/bigint.hpp"
#include "kns/common.hpp"

namespace kns {

/// Branching bound aggregated over a cover of size x:
///   f(n,k,t,s,x) = (k-t+1)^(x-t) C(x,t) C(n-x,k-x)
///                  + sum_{i=0}^{x-t-1} s (k-t+1)^i C(x,t).
/// Throws ParamError when x < t or any of n,k,t,x is nonpositive or s < 0.
BigInt eval_f(const BigInt& n, int k, int t, int s, int x);

/// Complementary size bound used against covers of size x:
///   g(n,k,t,s,x) = (x-t) C(n-t-1,k-t-1) + (k-x+1)(k-t+1) C(n-t-2,k-t-2)
///                  + t(k-t) C(n-x,k-x) + s(k-x+3).
BigInt eval_g(const BigInt& n, int k, int t, int s, int x);

/// Size of the augmented-star family:
///   h(n,k,t,s) = |{F : [t] subset F, |F intersect [k+1]| >= t+1}| + s + min(t,s)
/// with the first term evaluated in closed form by conditioning on
/// j = |F intersect [k+1]|.  Requires k >= t+1 and n >= 2k-t+s.
BigInt eval_h(const BigInt& n, int k, int t, int s);

/// The h formula without the hypothesis check (still exact).
BigInt eval_h_raw(const BigInt& n, int k, int t, int s);

/// (k-t+1)^(j-i) C(n-j,k-j) <= C(n-i,k-i) for t <= i <= j, given k >= t+1
/// and n >= (t+1)(k-t+1)^2.  Skipped outside the hypothesis.
CheckOutcome check_ratio_bound(const BigInt& n, int k, int t, int i, int j);

/// h(n,k,t,s) > (k-t+1) C(n-t-1,k-t-1) - C(k-t+1,2) C(n-t-2,k-t-2), and that
/// right side is at least (17/18)(k-t+1) C(n-t-1,k-t-1) (compared exactly by
/// cross-multiplication).  Needs k >= t+2 and n >= 3 C(t+2,2)((k-t+1)^2+s).
CheckOutcome check_h_lower_bound(const BigInt& n, int k, int t, int s);

/// One grid point of a bound sweep.  Unused coordinates stay -1.
struct SweepRow {
    std::string check;
    BigInt n;
    int k = 0;
    int t = 0;
    int s = -1;
    int i = -1;
    int j = -1;
    int x = -1;
    CheckOutcome outcome = CheckOutcome::skipped;
};

struct BoundSweepReport {
    std::vector<SweepRow> rows;

    std::size_t checked() const;   // rows that were actually evaluated
    std::size_t skipped() const;
    std::vector<SweepRow> failures() const;
    bool all_hold() const { return failures().empty(); }
    void merge(BoundSweepReport other);
};

/// Strict decrease of x -> f(n,k,t,s,x) over x in {t+1, ..., k-1}, row per
/// comparison point.  Needs k >= t+2 and n >= 2(t+1)((k-t+1)^2+s); below the
/// threshold the report holds a single skipped row.
BoundSweepReport check_f_decreasing(const BigInt& n, int k, int t, int s);

/// Strict increase of x -> g(n,k,t,s,x) over x in {t+2, ..., k-1}.  Needs
/// k >= t+3 and n >= 3 C(t+2,2)((k-t+1)^2+s).
BoundSweepReport check_g_increasing(const BigInt& n, int k, int t, int s);

/// Smallest n admitted by the named check's hypothesis.
BigInt min_legal_n(std::string_view check, int k, int t, int s);

/// Sweep grid: t in [t_min, t_max], k = t + span, s in [s_min, s_max], and
/// n = min_legal_n + offset for each offset.
struct SweepGrid {
    int t_min = 1;
    int t_max = 3;
    int span_min = 2;
    int span_max = 6;
    int s_min = 1;
    int s_max = 4;
    std::vector<int> n_offsets = {0, 1, 7};
};

/// Runs every bound check over the grid, at minimal legal n plus offsets.
/// The ratio bound sweeps all t <= i <= j <= k+2 and ignores s.
BoundSweepReport sweep_inequalities(const SweepGrid& grid = {});

} // namespace kns
