#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zerosum/config.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

/// A finite multiset of group elements: one member of the free
/// commutative monoid over G. Terms are kept as (element index,
/// multiplicity) pairs sorted by element, so multiset equality is
/// plain equality and the induced order is the canonical total order
/// used for deduplication and deterministic output.
class GSequence {
public:
    explicit GSequence(FiniteAbelianGroup group) : group_(std::move(group)) {}

    GSequence(FiniteAbelianGroup group, const std::vector<GroupElement>& elems)
        : group_(std::move(group)) {
        for (const auto& e : elems) {
            if (e.group() != group_) throw InputError("sequence term from a different group");
            push(e.index(), 1);
        }
        normalize();
    }

    static GSequence from_indices(const FiniteAbelianGroup& g, std::vector<int> idx) {
        GSequence s(g);
        for (int i : idx) {
            if (i < 0 || i >= g.order()) throw InputError("term index out of range");
            s.push(i, 1);
        }
        s.normalize();
        return s;
    }

    static GSequence from_counts(const FiniteAbelianGroup& g,
                                 std::vector<std::pair<int, int>> counts) {
        GSequence s(g);
        for (auto [i, m] : counts) {
            if (i < 0 || i >= g.order()) throw InputError("term index out of range");
            if (m <= 0) throw InputError("multiplicity must be positive");
            s.push(i, m);
        }
        s.normalize();
        return s;
    }

    const FiniteAbelianGroup& group() const { return group_; }
    int length() const { return length_; }
    bool is_empty() const { return length_ == 0; }

    /// Multiplicity of one element.
    int count(const GroupElement& a) const {
        if (a.group() != group_) throw InputError("element from a different group");
        return count_index(a.index());
    }

    int count_index(int idx) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(),
                                   std::pair<int, int>{idx, 0});
        return (it != terms_.end() && it->first == idx) ? it->second : 0;
    }

    const std::vector<std::pair<int, int>>& terms() const { return terms_; }

    std::vector<GroupElement> support() const {
        std::vector<GroupElement> out;
        for (auto [i, m] : terms_) out.push_back(group_.element_at(i));
        return out;
    }

    int support_size() const { return static_cast<int>(terms_.size()); }

    /// All terms with multiplicity, non-decreasing.
    std::vector<int> expand() const {
        std::vector<int> out;
        out.reserve(length_);
        for (auto [i, m] : terms_)
            for (int k = 0; k < m; ++k) out.push_back(i);
        return out;
    }

    GroupElement sigma() const { return group_.element_at(sigma_index()); }

    int sigma_index() const {
        int s = 0;
        for (auto [i, m] : terms_)
            s = group_.add_index(s, group_.scalar_index(m, i));
        return s;
    }

    GSequence with_index(int idx, int extra = 1) const {
        if (extra < 1) throw InputError("multiplicity must be positive");
        GSequence out = *this;
        out.push(idx, extra);
        out.normalize();
        return out;
    }

    GSequence without_index(int idx, int removed = 1) const {
        GSequence out(group_);
        bool found = false;
        for (auto [i, m] : terms_) {
            if (i == idx) {
                found = true;
                if (m < removed) throw InputError("removing more copies than present");
                if (m > removed) out.push(i, m - removed);
            } else {
                out.push(i, m);
            }
        }
        if (!found && removed > 0) throw InputError("element not present in sequence");
        out.recount();
        return out;
    }

    /// Multiset union.
    friend GSequence operator+(const GSequence& a, const GSequence& b) {
        if (a.group_ != b.group_) throw InputError("sequences over different groups");
        GSequence out = a;
        for (auto [i, m] : b.terms_) out.push(i, m);
        out.normalize();
        return out;
    }

    /// Multiset difference; `sub` must be contained in this sequence.
    GSequence minus(const GSequence& sub) const {
        if (sub.group_ != group_) throw InputError("sequences over different groups");
        GSequence out(group_);
        std::size_t j = 0;
        for (auto [i, m] : terms_) {
            int take = 0;
            if (j < sub.terms_.size() && sub.terms_[j].first == i) {
                take = sub.terms_[j].second;
                ++j;
            }
            if (take > m) throw InputError("not a subsequence");
            if (m - take > 0) out.push(i, m - take);
        }
        if (j != sub.terms_.size()) throw InputError("not a subsequence");
        out.recount();
        return out;
    }

    bool contains(const GSequence& sub) const {
        if (sub.group_ != group_) return false;
        std::size_t j = 0;
        for (auto [i, m] : terms_) {
            while (j < sub.terms_.size() && sub.terms_[j].first < i) return false;
            if (j < sub.terms_.size() && sub.terms_[j].first == i) {
                if (sub.terms_[j].second > m) return false;
                ++j;
            }
        }
        return j == sub.terms_.size();
    }

    bool operator==(const GSequence& other) const {
        return group_ == other.group_ && terms_ == other.terms_;
    }
    bool operator!=(const GSequence& other) const { return !(*this == other); }

    /// Canonical order: lexicographic on the (element, multiplicity)
    /// term list. Any fixed total order works for the enumerators;
    /// this one never changes between runs.
    bool operator<(const GSequence& other) const {
        return terms_ < other.terms_;
    }

    std::string describe() const {
        if (terms_.empty()) return "eps";
        std::string out;
        for (auto [i, m] : terms_) {
            if (!out.empty()) out += "*";
            out += group_.element_at(i).describe();
            if (m > 1) out += "^" + std::to_string(m);
        }
        return out;
    }

private:
    void push(int idx, int mult) {
        terms_.emplace_back(idx, mult);
        length_ += mult;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end());
        std::vector<std::pair<int, int>> merged;
        for (auto [i, m] : terms_) {
            if (!merged.empty() && merged.back().first == i)
                merged.back().second += m;
            else
                merged.emplace_back(i, m);
        }
        terms_ = std::move(merged);
        recount();
    }

    void recount() {
        length_ = 0;
        for (auto [i, m] : terms_) length_ += m;
    }

    FiniteAbelianGroup group_;
    std::vector<std::pair<int, int>> terms_;
    int length_ = 0;
};

inline GroupElement sigma(const GSequence& t) { return t.sigma(); }

namespace detail {

/// Sums of nonempty subsequences, as a bitset over the group.
inline Bitset subsum_bitset(const GSequence& t) {
    const auto& g = t.group();
    int n = static_cast<int>(g.order());
    Bitset reach(n);
    for (auto [a, m] : t.terms()) {
        for (int k = 0; k < m; ++k) {
            Bitset next = reach;
            reach.for_each([&](int x) { next.set(g.add_index(x, a)); });
            next.set(a);
            reach = next;
        }
    }
    return reach;
}

} // namespace detail

/// The set of elements expressible as a sum of one or more terms of T.
inline std::vector<GroupElement> subsum_set(const GSequence& t) {
    std::vector<GroupElement> out;
    detail::subsum_bitset(t).for_each(
        [&](int i) { out.push_back(t.group().element_at(i)); });
    return out;
}

inline bool is_zero_sum(const GSequence& t) {
    return !t.is_empty() && t.sigma_index() == 0;
}

inline bool is_zero_sum_free(const GSequence& t) {
    return !detail::subsum_bitset(t).test(0);
}

/// Nonempty, zero-sum, and no proper nonempty zero-sum subsequence.
/// Uses the single-deletion criterion: every proper subsequence lies
/// inside T with one copy of some element removed, so it is enough
/// that each such deletion is zero-sum free.
inline bool is_minimal_zero_sum(const GSequence& t) {
    if (t.is_empty() || t.sigma_index() != 0) return false;
    for (auto [i, m] : t.terms())
        if (!is_zero_sum_free(t.without_index(i)))
            return false;
    return true;
}

/// All minimal zero-sum sequences of length at most max_len, in
/// canonical order. Every minimal sequence arises exactly once as
/// (zero-sum free prefix) * (its largest term), so the search walks
/// the canonical zero-sum free tree and closes each node.
inline std::vector<GSequence> enumerate_minimal_zero_sum(const FiniteAbelianGroup& g,
                                                         int max_len,
                                                         const SearchLimits& limits = {}) {
    if (max_len < 1) throw InputError("max_len must be at least 1");
    int n = static_cast<int>(g.order());
    detail::NodeBudget budget(limits.node_cap);
    std::vector<GSequence> out;
    std::vector<int> stack;

    // closing the zero-sum free prefix with the negated running sum is
    // the only way to finish a minimal sequence whose largest term it is
    auto close = [&](int sum) {
        int a = g.neg_index(sum);
        if (!stack.empty() && a < stack.back()) return;
        auto v = stack;
        v.push_back(a);
        auto cand = GSequence::from_indices(g, std::move(v));
        if (is_minimal_zero_sum(cand)) out.push_back(std::move(cand));
    };

    // depth-first over canonical zero-sum free sequences
    auto rec = [&](auto&& self, const detail::Bitset& reach, int sum, int last) -> void {
        budget.tick();
        close(sum);
        if (static_cast<int>(stack.size()) >= max_len - 1) return;
        for (int a = std::max(last, 1); a < n; ++a) {
            if (reach.test(g.neg_index(a))) continue; // extension hits zero
            detail::Bitset next = reach;
            reach.for_each([&](int x) { next.set(g.add_index(x, a)); });
            next.set(a);
            stack.push_back(a);
            self(self, next, g.add_index(sum, a), a);
            stack.pop_back();
        }
    };
    rec(rec, detail::Bitset(n), 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Normalized index of a nonempty zero-sum sequence over a cyclic
/// group: the minimum over generators of (sum of Ind_g over the terms)
/// divided by n. The quotient is always a positive integer because the
/// index sum of a zero-sum sequence is a multiple of n.
inline std::int64_t index_of(const GSequence& v) {
    const auto& g = v.group();
    if (!g.is_cyclic() || g.order() < 2)
        throw InputError("index is defined over cyclic groups of order >= 2");
    if (v.is_empty() || v.sigma_index() != 0)
        throw InputError("index is defined for nonempty zero-sum sequences only");
    int n = static_cast<int>(g.order());
    std::int64_t best = -1;
    for (int gi = 1; gi < n; ++gi) {
        if (g.order_of_index(gi) != n) continue;
        auto gen = g.element_at(gi);
        std::int64_t sum = 0;
        for (auto [i, m] : v.terms())
            sum += static_cast<std::int64_t>(m) * ind(g, gen, g.element_at(i));
        if (sum % n != 0) throw Falsification("index sum of a zero-sum sequence not divisible by n");
        if (best < 0 || sum / n < best) best = sum / n;
    }
    return best;
}

} // namespace zerosum
