#include "kns/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <utility>

#include "kns/predicates.hpp"

namespace kns {

namespace {

using Clock = std::chrono::steady_clock;

// Exhaustive include/exclude recursion over vertices in bit-pattern order.
// State: deg[v] counts chosen neighbors of v; sat[v] counts chosen
// neighbors already at defect capacity.  A vertex with deg > s or sat > 0
// can never join the current branch, so both arrays drive the dead test and
// the remaining-vertices upper bound.
class Searcher {
public:
    Searcher(const std::vector<std::uint64_t>& adj, int s, const SearchConfig& cfg)
        : adj_(adj),
          vcount_(static_cast<int>(adj.size())),
          s_(s),
          require_violating_(cfg.require_not_t_intersecting),
          collect_all_(cfg.collect_all_extremal),
          node_limit_(cfg.node_limit),
          extremal_cap_(cfg.extremal_cap),
          deg_(adj.size(), 0),
          sat_(adj.size(), 0) {
        if (cfg.time_limit.count() > 0) {
            deadline_ = Clock::now() + cfg.time_limit;
            has_deadline_ = true;
        }
        best_ = require_violating_ ? -1 : 0;
    }

    void run() { rec(0); }

    int best() const { return best_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    bool truncated() const { return truncated_; }
    bool limit_hit() const { return limit_hit_; }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t prunes() const { return prunes_; }

private:
    bool dead(int v) const { return deg_[v] > s_ || sat_[v] > 0; }

    void shift_sat(int u, int delta) {
        for (std::uint64_t rest = adj_[u] & ~chosen_; rest != 0; rest &= rest - 1)
            sat_[std::countr_zero(rest)] += delta;
    }

    void include(int v) {
        edges_ += deg_[v];
        chosen_ |= 1ull << v;
        ++count_;
        for (std::uint64_t rest = adj_[v]; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            ++deg_[u];
            if ((chosen_ >> u) & 1 && deg_[u] == s_) shift_sat(u, +1);
        }
        if (deg_[v] == s_) shift_sat(v, +1);
    }

    void undo(int v) {
        if (deg_[v] == s_) shift_sat(v, -1);
        for (std::uint64_t rest = adj_[v]; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((chosen_ >> u) & 1 && deg_[u] == s_) shift_sat(u, -1);
            --deg_[u];
        }
        --count_;
        chosen_ &= ~(1ull << v);
        edges_ -= deg_[v];
    }

    void leaf() {
        if (require_violating_ && edges_ == 0) return;
        if (count_ > best_) {
            best_ = count_;
            masks_.assign(1, chosen_);
            truncated_ = false;
        } else if (count_ == best_ && collect_all_) {
            if (masks_.size() < extremal_cap_) masks_.push_back(chosen_);
            else truncated_ = true;
        } else if (count_ == best_ && masks_.empty()) {
            masks_.push_back(chosen_);
        }
    }

    void rec(int pos) {
        if (aborted_) return;
        ++nodes_;
        if (nodes_ >= node_limit_) {
            aborted_ = limit_hit_ = true;
            return;
        }
        if (has_deadline_ && (nodes_ & 4095) == 0 && Clock::now() > deadline_) {
            aborted_ = limit_hit_ = true;
            return;
        }

        while (pos < vcount_ && dead(pos)) ++pos;

        int live = 0;
        for (int v = pos; v < vcount_; ++v)
            if (!dead(v)) ++live;
        const int ub = count_ + live;
        if (best_ >= 0 && (collect_all_ ? ub < best_ : ub <= best_)) {
            ++prunes_;
            return;
        }

        if (pos == vcount_) {
            leaf();
            return;
        }

        include(pos);
        rec(pos + 1);
        undo(pos);
        if (aborted_) return;
        rec(pos + 1);
    }

    const std::vector<std::uint64_t>& adj_;
    const int vcount_;
    const int s_;
    const bool require_violating_;
    const bool collect_all_;
    const std::uint64_t node_limit_;
    const std::size_t extremal_cap_;

    std::vector<int> deg_;
    std::vector<int> sat_;
    std::uint64_t chosen_ = 0;
    int count_ = 0;
    std::uint64_t edges_ = 0;
    int best_;
    std::vector<std::uint64_t> masks_;
    bool truncated_ = false;
    bool aborted_ = false;
    bool limit_hit_ = false;
    std::uint64_t nodes_ = 0;
    std::uint64_t prunes_ = 0;
    Clock::time_point deadline_{};
    bool has_deadline_ = false;
};

} // namespace

SearchResult max_family(const SearchConfig& cfg) {
    const Params& p = cfg.params;
    const auto nn_opt = p.small_n();
    if (!nn_opt) throw ParamError("max_family: search needs n <= 64");
    const int nn = *nn_opt;

    const int cap = std::min(cfg.vertex_cap, max_ground_size);
    const BigInt vcount_big = binomial(BigInt(nn), p.k);
    if (vcount_big > cap)
        throw LimitError("max_family: C(n,k) = " + vcount_big.str() +
                         " exceeds the vertex cap " + std::to_string(cap));

    const std::vector<KSubset> vertices = all_k_subsets(nn, p.k);
    const int vcount = static_cast<int>(vertices.size());
    std::vector<std::uint64_t> adj(vcount, 0);
    for (int i = 0; i < vcount; ++i)
        for (int j = i + 1; j < vcount; ++j)
            if (intersection_size(vertices[i], vertices[j]) < p.t) {
                adj[i] |= 1ull << j;
                adj[j] |= 1ull << i;
            }

    Searcher searcher(adj, p.s, cfg);
    const auto start = Clock::now();
    searcher.run();
    const auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start);

    SearchResult result;
    result.max_size = std::max(searcher.best(), 0);
    result.stats.nodes = searcher.nodes();
    result.stats.prunes = searcher.prunes();
    result.stats.wall_ms = elapsed.count();
    result.exhausted = !searcher.limit_hit();
    result.extremal_truncated = searcher.truncated();

    for (std::uint64_t mask : searcher.masks()) {
        std::vector<KSubset> members;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            members.push_back(vertices[std::countr_zero(rest)]);
        result.extremal.push_back(Family::of(nn, p.k, std::move(members)));
    }

    for (const Family& f : result.extremal)
        if (f.support().count() > canon_support_cap) {
            result.canonical_available = false;
            break;
        }
    if (result.canonical_available) {
        for (const Family& f : result.extremal)
            result.canonical_classes.push_back(canonicalize(f));
        std::sort(result.canonical_classes.begin(), result.canonical_classes.end());
        result.canonical_classes.erase(
            std::unique(result.canonical_classes.begin(), result.canonical_classes.end()),
            result.canonical_classes.end());
    }
    return result;
}

std::string CanonicalForm::hex() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out << '.';
        out << std::hex << words[i];
    }
    return out.str();
}

namespace {

// Codegree of two support positions: members containing both.
int codegree(const std::vector<std::uint64_t>& members, int u, int v) {
    const std::uint64_t both = (1ull << u) | (1ull << v);
    int c = 0;
    for (std::uint64_t m : members)
        if ((m & both) == both) ++c;
    return c;
}

// Partition support positions by iterated degree/codegree profiles.  The
// resulting classes and their order are invariant under isomorphism, so the
// minimum over class-respecting relabelings is a true canonical form.
// Coarser classes would still be correct, only slower.
std::vector<int> invariant_classes(const std::vector<std::uint64_t>& members, int m,
                                   int& class_count) {
    std::vector<int> cls(m, 0);
    class_count = 1;
    for (;;) {
        std::vector<std::vector<long long>> keys(m);
        for (int v = 0; v < m; ++v) {
            auto& key = keys[v];
            key.push_back(cls[v]);
            int deg = 0;
            for (std::uint64_t mem : members)
                if ((mem >> v) & 1) ++deg;
            key.push_back(deg);
            std::vector<std::pair<int, int>> profile;
            for (int u = 0; u < m; ++u)
                if (u != v) profile.emplace_back(cls[u], codegree(members, u, v));
            std::sort(profile.begin(), profile.end());
            for (const auto& [c, cd] : profile) {
                key.push_back(c);
                key.push_back(cd);
            }
        }
        std::vector<std::vector<long long>> distinct(keys.begin(), keys.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < m; ++v)
            cls[v] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
        const int next_count = static_cast<int>(distinct.size());
        if (next_count == class_count) return cls;
        class_count = next_count;
    }
}

} // namespace

CanonicalForm canonicalize(const Family& f) {
    const std::vector<int> support = f.support().elements();
    const int m = static_cast<int>(support.size());
    if (m > canon_support_cap)
        throw LimitError("canonicalize: support of " + std::to_string(m) +
                         " exceeds cap " + std::to_string(canon_support_cap));

    CanonicalForm form;
    form.words = {static_cast<std::uint64_t>(f.k()), static_cast<std::uint64_t>(m),
                  static_cast<std::uint64_t>(f.size())};
    if (f.empty()) return form;

    std::array<int, max_ground_size + 1> index{};
    for (int i = 0; i < m; ++i) index[support[i]] = i;
    std::vector<std::uint64_t> members;
    members.reserve(f.size());
    for (const KSubset& mem : f.members()) {
        std::uint64_t bits = 0;
        for (std::uint64_t rest = mem.bits; rest != 0; rest &= rest - 1)
            bits |= 1ull << index[std::countr_zero(rest) + 1];
        members.push_back(bits);
    }

    // A complete uniform family is invariant under every relabeling.
    if (BigInt(f.size()) == binomial(BigInt(m), f.k())) {
        std::sort(members.begin(), members.end());
        form.words.insert(form.words.end(), members.begin(), members.end());
        return form;
    }

    int class_count = 0;
    const std::vector<int> cls = invariant_classes(members, m, class_count);

    std::vector<std::vector<int>> groups(class_count);
    for (int v = 0; v < m; ++v) groups[cls[v]].push_back(v);

    // A class of points present in every member is pointwise interchangeable:
    // permuting such points fixes each member mask, so one arrangement serves.
    std::vector<bool> pinned(class_count, false);
    for (int g = 0; g < class_count; ++g) {
        std::size_t deg = 0;
        for (std::uint64_t mem : members)
            if (mem >> groups[g][0] & 1) ++deg;
        pinned[g] = deg == members.size();
    }

    std::uint64_t assignments = 1;
    for (int g = 0; g < class_count; ++g) {
        if (pinned[g]) continue;
        for (std::size_t i = 2; i <= groups[g].size(); ++i) assignments *= i;
        if (assignments > 10'000'000ull)
            throw LimitError("canonicalize: relabeling budget exceeded");
    }

    std::vector<int> base(class_count, 0);
    for (int g = 1; g < class_count; ++g)
        base[g] = base[g - 1] + static_cast<int>(groups[g - 1].size());

    std::vector<std::vector<int>> arrangement = groups;
    std::vector<int> label(m, 0);
    std::vector<std::uint64_t> mapped(members.size());
    std::vector<std::uint64_t> best;

    for (;;) {
        for (int g = 0; g < class_count; ++g)
            for (std::size_t i = 0; i < arrangement[g].size(); ++i)
                label[arrangement[g][i]] = base[g] + static_cast<int>(i);
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::uint64_t bits = 0;
            for (std::uint64_t rest = members[i]; rest != 0; rest &= rest - 1)
                bits |= 1ull << label[std::countr_zero(rest)];
            mapped[i] = bits;
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;

        int g = 0;
        while (g < class_count &&
               (pinned[g] || !std::next_permutation(arrangement[g].begin(),
                                                    arrangement[g].end())))
            ++g;
        if (g == class_count) break;
    }

    form.words.insert(form.words.end(), best.begin(), best.end());
    return form;
}

Family decode_canonical(const CanonicalForm& form) {
    if (form.words.size() < 3) throw ParseError("decode_canonical: malformed form");
    const int k = static_cast<int>(form.words[0]);
    const int m = static_cast<int>(form.words[1]);
    const std::size_t count = form.words[2];
    if (form.words.size() != 3 + count) throw ParseError("decode_canonical: member count mismatch");
    const int n = std::max({m, k, 1});
    std::vector<KSubset> members;
    for (std::size_t i = 0; i < count; ++i) members.emplace_back(form.words[3 + i], n);
    return Family::of(n, k, std::move(members));
}

bool ClassificationVerdict::confirmed() const {
    return exhausted && !truncated && unmatched == 0 && !classes.empty() &&
           BigInt(max_size) == expected_size;
}

ClassificationVerdict verify_classification(int t, int s, int n, const SearchConfig& base) {
    if (t < 1 || s < 1) throw ParamError("verify_classification: requires t, s >= 1");
    if (n < t + s + 2) throw ParamError("verify_classification: requires n >= t+s+2");
    if (n > max_ground_size) throw ParamError("verify_classification: n exceeds ground cap");

    ClassificationVerdict verdict;
    verdict.t = t;
    verdict.s = s;
    verdict.n = n;
    verdict.expected_size = classification_size(s);

    const BigInt vcount = binomial(BigInt(n), t + 1);
    const int cap = std::min(base.vertex_cap, max_ground_size);
    if (vcount > cap)
        throw LimitError("verify_classification: C(n,t+1) = " + vcount.str() +
                         " exceeds the vertex cap " + std::to_string(cap));
    verdict.vertices = vcount.convert_to<int>();

    SearchConfig cfg = base;
    cfg.params = Params(BigInt(n), t + 1, t, s);
    cfg.require_not_t_intersecting = true;
    cfg.collect_all_extremal = true;
    const SearchResult result = max_family(cfg);

    verdict.max_size = result.max_size;
    verdict.exhausted = result.exhausted;
    verdict.truncated = result.extremal_truncated;

    if (!result.canonical_available) {
        verdict.unmatched = result.extremal.size();
        return verdict;
    }
    verdict.classes = result.canonical_classes;

    std::vector<std::pair<CanonicalForm, std::string>> references;
    for (ExtremalCase c : applicable_cases(t, s, BigInt(n))) {
        const NamedConstruction built = classification_family(c, t, s, BigInt(n));
        references.emplace_back(canonicalize(*built.family), to_string(c));
    }

    for (const CanonicalForm& cls : verdict.classes) {
        const auto hit = std::find_if(references.begin(), references.end(),
                                      [&](const auto& ref) { return ref.first == cls; });
        if (hit == references.end()) {
            verdict.matched_cases.push_back("unmatched");
            ++verdict.unmatched;
        } else {
            verdict.matched_cases.push_back(hit->second);
        }
    }
    return verdict;
}

Family extend_to_maximal(const Family& f, int t, int s) {
    std::vector<KSubset> members(f.members().begin(), f.members().end());
    std::vector<int> degree(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (intersection_size(members[i], members[j]) < t) {
                ++degree[i];
                ++degree[j];
            }
    if (!members.empty() && *std::max_element(degree.begin(), degree.end()) > s)
        throw ParamError("extend_to_maximal: family already exceeds the defect cap");

    for (KSubset cand : enumerate_k_subsets(f.n(), f.k())) {
        if (std::find(members.begin(), members.end(), cand) != members.end()) continue;
        int cand_deg = 0;
        bool feasible = true;
        for (std::size_t i = 0; i < members.size() && feasible; ++i)
            if (intersection_size(members[i], cand) < t) {
                ++cand_deg;
                if (cand_deg > s || degree[i] + 1 > s) feasible = false;
            }
        if (!feasible) continue;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (intersection_size(members[i], cand) < t) ++degree[i];
        members.push_back(cand);
        degree.push_back(cand_deg);
    }
    return Family::of(f.n(), f.k(), std::move(members));
}

CheckOutcome check_min_covers_intersecting(const Family& f, int t, int s) {
    const int k = f.k();
    if (f.empty() || k < t + 2 || f.n() < 2 * k + s) return CheckOutcome::skipped;
    if (!is_s_almost_t_intersecting(f, t, s).first) return CheckOutcome::skipped;
    if (extend_to_maximal(f, t, s).size() != f.size()) return CheckOutcome::skipped;

    const CoverResult covers = covering_number(f, t, 200'000);
    if (covers.tau > k || covers.truncated) return CheckOutcome::skipped;

    std::vector<KSubset> sets;
    sets.reserve(covers.witnesses.size());
    for (const auto& w : covers.witnesses) sets.push_back(KSubset::of(w, f.n()));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (intersection_size(sets[i], sets[j]) < t) return CheckOutcome::violated;
    return CheckOutcome::holds;
}

} // namespace kns
