#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/config.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/hom.hpp"
#include "zerosum/weighted.hpp"

namespace zerosum {

/// One coset a + H of a validated subgroup H. The stored
/// representative is the least member, so cosets with equal member
/// sets compare equal.
class Coset {
public:
    Coset(FiniteAbelianGroup group, int rep_index, IndexSet subgroup)
        : group_(std::move(group)), subgroup_(std::move(subgroup)) {
        if (!is_subgroup(group_, subgroup_))
            throw InputError("coset subgroup is not closed");
        if (rep_index < 0 || rep_index >= group_.order())
            throw InputError("coset representative out of range");
        members_.reserve(subgroup_.size());
        for (int h : subgroup_) members_.push_back(group_.add_index(rep_index, h));
        std::sort(members_.begin(), members_.end());
        rep_ = members_.front();
    }

    const FiniteAbelianGroup& group() const { return group_; }
    int representative_index() const { return rep_; }
    GroupElement representative() const { return group_.element_at(rep_); }
    const IndexSet& subgroup() const { return subgroup_; }
    const IndexSet& members() const { return members_; }
    std::int64_t subgroup_order() const { return static_cast<std::int64_t>(subgroup_.size()); }
    std::int64_t index_in_group() const { return group_.order() / subgroup_order(); }

    bool contains_index(int x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }

    bool operator==(const Coset& other) const {
        return group_ == other.group_ && members_ == other.members_;
    }

private:
    FiniteAbelianGroup group_;
    int rep_ = 0;
    IndexSet subgroup_;
    IndexSet members_;
};

/// A finite system of cosets over one ambient group, possibly with
/// repeated subgroups; order matters only for the greedy reduction.
struct CoverSystem {
    FiniteAbelianGroup ambient;
    std::vector<Coset> cosets;

    int size() const { return static_cast<int>(cosets.size()); }

    CoverSystem(FiniteAbelianGroup g, std::vector<Coset> cs)
        : ambient(std::move(g)), cosets(std::move(cs)) {
        for (const auto& c : cosets)
            if (c.group() != ambient)
                throw InputError("coset over a different ambient group");
    }
};

inline bool is_cover(const CoverSystem& s) {
    detail::Bitset seen(static_cast<int>(s.ambient.order()));
    for (const auto& c : s.cosets)
        for (int x : c.members()) seen.set(x);
    return seen.count() == s.ambient.order();
}

namespace detail {

inline bool covers_without(const CoverSystem& s, std::size_t skip) {
    Bitset seen(static_cast<int>(s.ambient.order()));
    for (std::size_t i = 0; i < s.cosets.size(); ++i) {
        if (i == skip) continue;
        for (int x : s.cosets[i].members()) seen.set(x);
    }
    return seen.count() == s.ambient.order();
}

} // namespace detail

inline bool is_irredundant_cover(const CoverSystem& s) {
    if (!is_cover(s)) return false;
    for (std::size_t i = 0; i < s.cosets.size(); ++i)
        if (detail::covers_without(s, i)) return false;
    return true;
}

/// Greedy irredundant subcover: walk the list in order and drop every
/// coset the rest can spare. The outcome still covers and has no
/// removable member.
inline CoverSystem irredundant_reduce(const CoverSystem& s) {
    if (!is_cover(s)) throw InputError("not a cover");
    std::vector<Coset> kept = s.cosets;
    std::size_t i = 0;
    while (i < kept.size()) {
        CoverSystem probe(s.ambient, kept);
        if (detail::covers_without(probe, i))
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    CoverSystem out(s.ambient, std::move(kept));
    if (!is_irredundant_cover(out))
        throw Falsification("greedy reduction left a removable coset");
    return out;
}

struct IndexBoundReport {
    int k = 0;                    // size of the irredundant cover
    std::int64_t max_index = 0;   // largest [F : H_i]
    std::int64_t limit = 0;       // 2^(k-1)
    bool holds = false;
    std::size_t tightest = 0;     // position of the coset attaining max_index
};

/// Index bound in irredundant covers: every participating subgroup has
/// index at most 2^(k-1). Requires an irredundant cover.
inline IndexBoundReport sun_index_bound_verify(const CoverSystem& s) {
    if (!is_irredundant_cover(s))
        throw InputError("index bound requires an irredundant cover");
    IndexBoundReport rep;
    rep.k = s.size();
    rep.limit = rep.k >= 63 ? std::int64_t{1} << 62 : (std::int64_t{1} << (rep.k - 1));
    for (std::size_t i = 0; i < s.cosets.size(); ++i) {
        auto idx = s.cosets[i].index_in_group();
        if (idx > rep.max_index) {
            rep.max_index = idx;
            rep.tightest = i;
        }
    }
    rep.holds = rep.max_index <= rep.limit;
    return rep;
}

/// Cover of the domain extracted from an extremal weighted-zero-sum
/// free sequence: the sums reachable from T (plus zero) pull back
/// through every weight to a union of kernel cosets that must exhaust
/// the domain, because appending any further element kills freeness.
inline CoverSystem kernels_to_cover(const FiniteAbelianGroup& f,
                                    const FiniteAbelianGroup& g, const WeightSet& psi,
                                    const GSequence& t,
                                    const SearchLimits& limits = {}) {
    if (t.group() != f) throw InputError("sequence not over the domain group");
    if (!is_psi_zero_sum_free(t, psi))
        throw InputError("sequence is not weighted-zero-sum free");
    auto dpsi = weighted_davenport(f, g, psi, limits);
    if (t.length() != dpsi.value - 1)
        throw InputError("sequence is not an extremal witness");

    auto reach = detail::psi_reach_bitset(t, psi);
    reach.set(0);

    std::vector<Coset> out;
    for (const auto& h : psi.homs()) {
        auto ker = h.kernel_idx();
        auto part = cosets(f, ker);
        for (std::size_t c = 0; c < part.reps.size(); ++c) {
            if (!reach.test(h.apply_index(part.reps[c]))) continue;
            Coset coset(f, part.reps[c], ker);
            if (std::find(out.begin(), out.end(), coset) == out.end())
                out.push_back(std::move(coset));
        }
    }
    CoverSystem cover(f, std::move(out));
    if (!is_cover(cover))
        throw Falsification("kernel cover fails to exhaust the domain");
    return cover;
}

/// Drop cosets whose subgroup index exceeds the threshold. Over a
/// finite group every index is at most |F|, so thresholds from |F| up
/// never remove anything; the helper exists to state that degeneracy.
inline CoverSystem coset_index_filter(const CoverSystem& s, std::int64_t threshold) {
    std::vector<Coset> kept;
    for (const auto& c : s.cosets)
        if (c.index_in_group() <= threshold) kept.push_back(c);
    return {s.ambient, std::move(kept)};
}

struct MaxIrredundantReport {
    int max_size = 0;     // best irredundant cover size found
    bool exact = false;   // exhaustive search completed under the cap
    int universe = 0;     // number of distinct candidate cosets
    std::int64_t covers_seen = 0;
};

/// Largest irredundant cover of f by cosets of the given subgroups,
/// each distinct coset used at most once (repeats never survive
/// irredundancy). Exhaustive include/exclude search, pruned by suffix
/// coverage and by the monotone loss of private elements.
inline MaxIrredundantReport max_irredundant_size(const FiniteAbelianGroup& f,
                                                 const std::vector<IndexSet>& kernels,
                                                 const SearchLimits& limits = {}) {
    int n = static_cast<int>(f.order());
    std::vector<Coset> universe;
    for (const auto& h : kernels) {
        auto part = cosets(f, h); // validates
        for (std::size_t c = 0; c < part.reps.size(); ++c) {
            Coset coset(f, part.reps[c], h);
            if (std::find(universe.begin(), universe.end(), coset) == universe.end())
                universe.push_back(std::move(coset));
        }
    }
    MaxIrredundantReport rep;
    rep.universe = static_cast<int>(universe.size());

    // suffix unions for the coverage prune
    std::vector<detail::Bitset> suffix(universe.size() + 1, detail::Bitset(n));
    for (int i = static_cast<int>(universe.size()) - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        for (int x : universe[i].members()) suffix[i].set(x);
    }

    detail::NodeBudget budget(limits.node_cap);
    std::vector<int> cover_count(n, 0);
    std::vector<std::size_t> chosen;

    auto all_private = [&]() {
        for (auto ci : chosen) {
            bool priv = false;
            for (int x : universe[ci].members())
                if (cover_count[x] == 1) { priv = true; break; }
            if (!priv) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        budget.tick();
        if (!all_private()) return; // adding more never restores privacy
        if (pos == universe.size()) {
            bool covered = true;
            for (int x = 0; x < n; ++x)
                if (cover_count[x] == 0) { covered = false; break; }
            if (covered) {
                ++rep.covers_seen;
                rep.max_size = std::max(rep.max_size, static_cast<int>(chosen.size()));
            }
            return;
        }
        // can the remaining cosets still complete a cover?
        for (int x = 0; x < n; ++x)
            if (cover_count[x] == 0 && !suffix[pos].test(x)) return;

        chosen.push_back(pos);
        for (int x : universe[pos].members()) ++cover_count[x];
        self(self, pos + 1);
        for (int x : universe[pos].members()) --cover_count[x];
        chosen.pop_back();

        self(self, pos + 1);
    };

    try {
        rec(rec, 0);
        rep.exact = true;
    } catch (const CapExceeded&) {
        rep.exact = false; // best-so-far is only a lower bound
    }
    return rep;
}

struct CoverSizeBoundReport {
    MaxIrredundantReport m;
    InvariantResult dpsi;
    std::int64_t bound = 0; // 2^(M-1)
    enum class Verdict { holds, violated, inconclusive } verdict =
        Verdict::inconclusive;
};

/// Bound the weighted Davenport constant by the largest irredundant
/// cover assembled from the weight kernels: D_Psi <= 2^(M-1). An
/// incomplete search can only understate M, so a failed comparison is
/// then inconclusive rather than a violation.
inline CoverSizeBoundReport cover_size_bound_check(const FiniteAbelianGroup& f,
                                                   const FiniteAbelianGroup& g,
                                                   const WeightSet& psi,
                                                   const SearchLimits& limits = {}) {
    std::vector<IndexSet> kernels;
    for (const auto& h : psi.homs()) {
        auto k = h.kernel_idx();
        if (std::find(kernels.begin(), kernels.end(), k) == kernels.end())
            kernels.push_back(std::move(k));
    }
    CoverSizeBoundReport rep{max_irredundant_size(f, kernels, limits),
                             weighted_davenport(f, g, psi, limits), 0,
                             CoverSizeBoundReport::Verdict::inconclusive};
    int m = rep.m.max_size;
    rep.bound = m >= 1 ? (m >= 63 ? (std::int64_t{1} << 62) : (std::int64_t{1} << (m - 1))) : 0;
    bool ok = rep.dpsi.value <= rep.bound;
    if (ok)
        rep.verdict = CoverSizeBoundReport::Verdict::holds;
    else
        rep.verdict = rep.m.exact ? CoverSizeBoundReport::Verdict::violated
                                  : CoverSizeBoundReport::Verdict::inconclusive;
    return rep;
}

struct QuotientWeightsReport {
    FiniteAbelianGroup codomain;
    std::vector<Homomorphism> weights; // one per given subgroup, kernel = subgroup
    bool kernels_match = false;
    InvariantResult dpsi;
    bool cover_exists = false; // a finite cover by cosets of the subgroups
    int cover_size = 0;
};

/// Both directions of the cover/finiteness translation for a finite
/// domain: build the direct sum of the quotients with the canonical
/// maps (kernels land exactly on the given subgroups, verified
/// extensionally), compute the finite weighted Davenport constant, and
/// exhibit a cover by cosets of the first subgroup.
inline QuotientWeightsReport quotient_weights_roundtrip(
    const FiniteAbelianGroup& f, const std::vector<IndexSet>& subgroups,
    const SearchLimits& limits = {}) {
    if (subgroups.empty()) throw InputError("need at least one subgroup");
    std::vector<FiniteAbelianGroup> parts;
    std::vector<Homomorphism> projections;
    for (const auto& h : subgroups) {
        auto q = quotient_projection(f, h); // validates the subgroup
        parts.push_back(q.quotient);
        projections.push_back(q.projection);
    }
    auto ds = direct_sum_with_injections(parts);

    QuotientWeightsReport rep{ds.sum, {}, true,
                              InvariantResult(0, false, GSequence(f)), false, 0};
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        auto psi_i = compose(ds.injections[i], projections[i]);
        if (psi_i.kernel_idx() != subgroups[i]) rep.kernels_match = false;
        rep.weights.push_back(std::move(psi_i));
    }

    std::vector<Homomorphism> unique;
    for (const auto& w : rep.weights)
        if (std::find(unique.begin(), unique.end(), w) == unique.end())
            unique.push_back(w);
    WeightSet psi(f, ds.sum, std::move(unique));
    rep.dpsi = weighted_davenport(f, ds.sum, psi, limits);

    auto part = cosets(f, subgroups.front());
    std::vector<Coset> cs;
    for (std::size_t c = 0; c < part.reps.size(); ++c)
        cs.emplace_back(f, part.reps[c], subgroups.front());
    CoverSystem cover(f, std::move(cs));
    rep.cover_exists = is_cover(cover);
    rep.cover_size = cover.size();
    return rep;
}

} // namespace zerosum
