#include "kns/predicates.hpp"

#include <algorithm>

namespace kns {

bool is_t_intersecting(const Family& f, int t) {
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (intersection_size(ms[i], ms[j]) < t) return false;
    return true;
}

Family defect_set(const Family& f, const KSubset& h, int t) {
    if (h.n != f.n()) throw ParamError("defect_set: mismatched ground sets");
    std::vector<KSubset> out;
    for (const KSubset& m : f.members())
        if (intersection_size(m, h) < t) out.push_back(m);
    return Family::of(f.n(), f.k(), std::move(out));
}

std::pair<bool, DefectReport> is_s_almost_t_intersecting(const Family& f, int t, int s) {
    DefectReport report;
    report.degrees.assign(f.size(), 0);
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (intersection_size(ms[i], ms[j]) < t) {
                ++report.degrees[i];
                ++report.degrees[j];
            }
    for (std::size_t i = 0; i < report.degrees.size(); ++i)
        if (report.degrees[i] > report.max_defect) {
            report.max_defect = report.degrees[i];
            report.max_index = i;
        }
    if (!ms.empty())
        for (const KSubset& m : ms)
            if (m != ms[report.max_index] &&
                intersection_size(m, ms[report.max_index]) < t)
                report.witnesses.push_back(m);
    return {report.max_defect <= s, std::move(report)};
}

bool kneser_edge_check(const Family& f, int t, int s) {
    const std::size_t m = f.size();
    std::vector<std::vector<int>> elems;
    elems.reserve(m);
    for (const KSubset& member : f.members()) elems.push_back(member.elements());

    std::vector<int> degree(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            int common = 0;
            std::size_t a = 0, b = 0;
            while (a < elems[i].size() && b < elems[j].size()) {
                if (elems[i][a] < elems[j][b]) ++a;
                else if (elems[i][a] > elems[j][b]) ++b;
                else { ++common; ++a; ++b; }
            }
            if (common < t) {
                ++degree[i];
                ++degree[j];
            }
        }
    return std::all_of(degree.begin(), degree.end(), [s](int d) { return d <= s; });
}

Family restriction(const Family& f, const KSubset& h) {
    if (h.n != f.n()) throw ParamError("restriction: mismatched ground sets");
    std::vector<KSubset> out;
    for (const KSubset& m : f.members())
        if (h.subset_of(m)) out.push_back(m);
    return Family::of(f.n(), f.k(), std::move(out));
}

bool is_t_cover(const KSubset& tset, const Family& f, int t) {
    if (tset.n != f.n()) throw ParamError("is_t_cover: mismatched ground sets");
    for (const KSubset& m : f.members())
        if (intersection_size(tset, m) < t) return false;
    return true;
}

CoverResult covering_number(const Family& f, int t, std::size_t witness_cap) {
    if (f.empty()) throw ParamError("covering_number: undefined for the empty family");
    if (t < 1 || t > f.k()) throw ParamError("covering_number: t out of range");

    const std::vector<int> universe = f.support().elements();
    const int u = static_cast<int>(universe.size());

    CoverResult result;
    for (int r = t; r <= u; ++r) {
        // Lexicographic index combinations of size r from the support.
        std::vector<int> idx(r);
        for (int i = 0; i < r; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            std::uint64_t bits = 0;
            for (int i : idx) bits |= 1ull << (universe[i] - 1);
            if (is_t_cover(KSubset(bits, f.n()), f, t)) {
                if (result.witnesses.size() < witness_cap) {
                    std::vector<int> cover(r);
                    for (int i = 0; i < r; ++i) cover[i] = universe[idx[i]];
                    result.witnesses.push_back(std::move(cover));
                } else {
                    result.truncated = true;
                }
            }
            more = false;
            for (int i = r - 1; i >= 0; --i)
                if (idx[i] < u - (r - i)) {
                    ++idx[i];
                    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
        }
        if (!result.witnesses.empty()) {
            result.tau = r;
            return result;
        }
    }
    // The full support always covers, so this point is unreachable.
    throw ParamError("covering_number: no cover found");
}

CheckOutcome check_restriction_bound(const Family& f, int t, int s, const KSubset& h) {
    const int k = f.k();
    const BigInt n = f.n();
    if (k < t + 1) return CheckOutcome::skipped;
    const BigInt span = k - t + 1;
    if (n < (t + 1) * span * span) return CheckOutcome::skipped;
    if (!is_s_almost_t_intersecting(f, t, s).first) return CheckOutcome::skipped;
    if (f.empty()) return CheckOutcome::skipped;

    const int tau = covering_number(f, t).tau;
    if (tau < t + 1 || tau > k) return CheckOutcome::skipped;
    const int hsize = h.count();
    if (hsize >= tau) return CheckOutcome::skipped;

    BigInt bound = ipow(span, tau - hsize) * binomial(n - tau, k - tau);
    for (int i = 0; i < tau - hsize; ++i) bound += s * ipow(span, i);

    return BigInt(restriction(f, h).size()) <= bound ? CheckOutcome::holds
                                                     : CheckOutcome::violated;
}

CheckOutcome check_kt1_size_bound(const Family& f, int t, int s) {
    if (f.k() != t + 1 || f.n() < t + 3) return CheckOutcome::skipped;
    if (!is_s_almost_t_intersecting(f, t, s).first) return CheckOutcome::skipped;
    if (is_t_intersecting(f, t)) return CheckOutcome::skipped;

    int min_meet = f.k();
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            min_meet = std::min(min_meet, intersection_size(ms[i], ms[j]));

    const std::size_t bound = min_meet >= t - 1 ? 2 * s + 4 : 2 * s;
    return f.size() <= bound ? CheckOutcome::holds : CheckOutcome::violated;
}

CheckOutcome check_cover_excess_bound(const Family& f, int t, int s) {
    const int k = f.k();
    if (k < t + 1 || f.n() < 2 * k) return CheckOutcome::skipped;
    if (!is_s_almost_t_intersecting(f, t, s).first) return CheckOutcome::skipped;
    if (f.empty() || covering_number(f, t).tau <= k) return CheckOutcome::skipped;

    const BigInt bound = s * binomial(BigInt(2 * k - 2 * t + 2), k - t + 1);
    return BigInt(f.size()) <= bound ? CheckOutcome::holds : CheckOutcome::violated;
}

} // namespace kns
