#include "kns/formulas.hpp"

#include <algorithm>
#include <utility>

namespace kns {

namespace {

// C(n, r) extended by C(n, r) = 0 for r < 0.
BigInt bin0(const BigInt& n, int r) {
    return r < 0 ? BigInt(0) : binomial(n, r);
}

void require_positive(const BigInt& n, int k, int t, int s) {
    if (n < 1 || k < 1 || t < 1) throw ParamError("bound formula: arguments must be positive");
    if (s < 0) throw ParamError("bound formula: s must be >= 0");
}

} // namespace

BigInt eval_f(const BigInt& n, int k, int t, int s, int x) {
    require_positive(n, k, t, s);
    if (x < t) throw ParamError("eval_f: x must be >= t");
    const BigInt span = k - t + 1;
    const BigInt cxt = binomial(BigInt(x), t);
    BigInt value = ipow(span, x - t) * cxt * bin0(n - x, k - x);
    for (int i = 0; i <= x - t - 1; ++i) value += s * ipow(span, i) * cxt;
    return value;
}

BigInt eval_g(const BigInt& n, int k, int t, int s, int x) {
    require_positive(n, k, t, s);
    if (x < t) throw ParamError("eval_g: x must be >= t");
    return (x - t) * bin0(n - t - 1, k - t - 1) +
           BigInt(k - x + 1) * (k - t + 1) * bin0(n - t - 2, k - t - 2) +
           BigInt(t) * (k - t) * bin0(n - x, k - x) + BigInt(s) * (k - x + 3);
}

BigInt eval_h_raw(const BigInt& n, int k, int t, int s) {
    require_positive(n, k, t, s);
    // Members containing [t] and meeting [k+1] in j >= t+1 elements: choose
    // the j-t extra elements of [k+1] and the k-j elements outside it.
    BigInt value = 0;
    for (int j = t + 1; j <= k; ++j)
        value += binomial(BigInt(k + 1 - t), j - t) * bin0(n - k - 1, k - j);
    return value + s + std::min(t, s);
}

BigInt eval_h(const BigInt& n, int k, int t, int s) {
    require_positive(n, k, t, s);
    if (k < t + 1) throw ParamError("eval_h: requires k >= t+1");
    if (n < 2 * k - t + s) throw ParamError("eval_h: requires n >= 2k-t+s");
    return eval_h_raw(n, k, t, s);
}

CheckOutcome check_ratio_bound(const BigInt& n, int k, int t, int i, int j) {
    if (t < 1 || k < t + 1 || i < t || j < i) return CheckOutcome::skipped;
    const BigInt span = k - t + 1;
    if (n < (t + 1) * span * span) return CheckOutcome::skipped;
    // Out-of-range binomials vanish on both sides, so i > k compares 0 <= 0.
    const BigInt lhs = ipow(span, j - i) * bin0(n - j, k - j);
    return lhs <= bin0(n - i, k - i) ? CheckOutcome::holds : CheckOutcome::violated;
}

CheckOutcome check_h_lower_bound(const BigInt& n, int k, int t, int s) {
    if (t < 1 || s < 1 || k < t + 2) return CheckOutcome::skipped;
    if (n < min_legal_n("h_lower_bound", k, t, s)) return CheckOutcome::skipped;
    const BigInt span = k - t + 1;
    const BigInt head = span * binomial(n - t - 1, k - t - 1);
    const BigInt mid = head - binomial(span, 2) * bin0(n - t - 2, k - t - 2);
    const bool ok = eval_h(n, k, t, s) > mid && 18 * mid >= 17 * head;
    return ok ? CheckOutcome::holds : CheckOutcome::violated;
}

std::size_t BoundSweepReport::checked() const {
    std::size_t c = 0;
    for (const SweepRow& r : rows)
        if (r.outcome != CheckOutcome::skipped) ++c;
    return c;
}

std::size_t BoundSweepReport::skipped() const { return rows.size() - checked(); }

std::vector<SweepRow> BoundSweepReport::failures() const {
    std::vector<SweepRow> out;
    for (const SweepRow& r : rows)
        if (r.outcome == CheckOutcome::violated) out.push_back(r);
    return out;
}

void BoundSweepReport::merge(BoundSweepReport other) {
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
                std::make_move_iterator(other.rows.end()));
}

namespace {

SweepRow make_row(std::string check, BigInt n, int k, int t, int s, int i, int j, int x,
                  CheckOutcome outcome) {
    SweepRow row;
    row.check = std::move(check);
    row.n = std::move(n);
    row.k = k;
    row.t = t;
    row.s = s;
    row.i = i;
    row.j = j;
    row.x = x;
    row.outcome = outcome;
    return row;
}

} // namespace

BoundSweepReport check_f_decreasing(const BigInt& n, int k, int t, int s) {
    BoundSweepReport report;
    if (t < 1 || s < 1 || k < t + 2 || n < min_legal_n("f_decreasing", k, t, s)) {
        report.rows.push_back(
            make_row("f_decreasing", n, k, t, s, -1, -1, -1, CheckOutcome::skipped));
        return report;
    }
    for (int x = t + 1; x <= k - 1; ++x) {
        const bool ok = eval_f(n, k, t, s, x) > eval_f(n, k, t, s, x + 1);
        report.rows.push_back(make_row("f_decreasing", n, k, t, s, -1, -1, x,
                                       ok ? CheckOutcome::holds : CheckOutcome::violated));
    }
    return report;
}

BoundSweepReport check_g_increasing(const BigInt& n, int k, int t, int s) {
    BoundSweepReport report;
    if (t < 1 || s < 1 || k < t + 3 || n < min_legal_n("g_increasing", k, t, s)) {
        report.rows.push_back(
            make_row("g_increasing", n, k, t, s, -1, -1, -1, CheckOutcome::skipped));
        return report;
    }
    for (int x = t + 2; x <= k - 1; ++x) {
        const bool ok = eval_g(n, k, t, s, x) < eval_g(n, k, t, s, x + 1);
        report.rows.push_back(make_row("g_increasing", n, k, t, s, -1, -1, x,
                                       ok ? CheckOutcome::holds : CheckOutcome::violated));
    }
    return report;
}

BigInt min_legal_n(std::string_view check, int k, int t, int s) {
    const BigInt span = k - t + 1;
    if (check == "ratio_bound") return (t + 1) * span * span;
    if (check == "f_decreasing") return 2 * (t + 1) * (span * span + s);
    if (check == "g_increasing" || check == "h_lower_bound")
        return 3 * binomial(BigInt(t + 2), 2) * (span * span + s);
    throw ParamError("min_legal_n: unknown check id");
}

BoundSweepReport sweep_inequalities(const SweepGrid& grid) {
    BoundSweepReport report;
    for (int t = grid.t_min; t <= grid.t_max; ++t) {
        for (int span = grid.span_min; span <= grid.span_max; ++span) {
            const int k = t + span;

            const BigInt ratio_base = min_legal_n("ratio_bound", k, t, 0);
            for (int off : grid.n_offsets) {
                const BigInt n = ratio_base + off;
                for (int i = t; i <= k + 2; ++i)
                    for (int j = i; j <= k + 2; ++j)
                        report.rows.push_back(make_row("ratio_bound", n, k, t, -1, i, j, -1,
                                                       check_ratio_bound(n, k, t, i, j)));
            }

            for (int s = grid.s_min; s <= grid.s_max; ++s) {
                for (int off : grid.n_offsets) {
                    report.merge(check_f_decreasing(min_legal_n("f_decreasing", k, t, s) + off,
                                                    k, t, s));
                    report.merge(check_g_increasing(min_legal_n("g_increasing", k, t, s) + off,
                                                    k, t, s));
                    const BigInt n = min_legal_n("h_lower_bound", k, t, s) + off;
                    report.rows.push_back(make_row("h_lower_bound", n, k, t, s, -1, -1, -1,
                                                   check_h_lower_bound(n, k, t, s)));
                }
            }
        }
    }
    return report;
}

} // namespace kns
