// Brute-force oracles used only by tests. Everything here works from
// the definitions by full enumeration and never calls into the pruned
// searches or dynamic programs it is checking.
#pragma once

#include <set>
#include <vector>

#include "zerosum/group.hpp"
#include "zerosum/hom.hpp"
#include "zerosum/sequence.hpp"

namespace oracles {

using zerosum::FiniteAbelianGroup;
using zerosum::GSequence;
using zerosum::Homomorphism;

inline std::set<int> subsums(const GSequence& t) {
    auto terms = t.expand();
    const auto& g = t.group();
    std::set<int> out;
    for (std::uint32_t mask = 1; mask < (1u << terms.size()); ++mask) {
        int s = 0;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (mask & (1u << i)) s = g.add_index(s, terms[i]);
        out.insert(s);
    }
    return out;
}

inline bool is_zero_sum_free(const GSequence& t) {
    return subsums(t).count(0) == 0;
}

// direct definition: nonempty zero-sum without a proper nonempty
// zero-sum sub-multiset
inline bool is_minimal_zero_sum(const GSequence& t) {
    if (t.is_empty() || t.sigma().index() != 0) return false;
    auto terms = t.expand();
    const auto& g = t.group();
    for (std::uint32_t mask = 1; mask + 1 < (1u << terms.size()); ++mask) {
        int s = 0;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (mask & (1u << i)) s = g.add_index(s, terms[i]);
        if (s == 0) return false; // proper selection: fewer terms than t
    }
    return true;
}

template <typename Fn>
inline void for_each_multiset(const FiniteAbelianGroup& g, int max_len, Fn&& fn) {
    std::vector<int> stack;
    auto rec = [&](auto&& self, int last) -> void {
        if (!stack.empty()) fn(GSequence::from_indices(g, stack));
        if (static_cast<int>(stack.size()) == max_len) return;
        for (int a = last; a < g.order(); ++a) {
            stack.push_back(a);
            self(self, a);
            stack.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<GSequence> all_minimal_zero_sum(const FiniteAbelianGroup& g,
                                                   int max_len) {
    std::vector<GSequence> out;
    for_each_multiset(g, max_len, [&](const GSequence& t) {
        if (oracles::is_minimal_zero_sum(t)) out.push_back(t);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// weighted: scan every per-term choice among {skip} + weights
inline bool is_psi_zero_sum_free(const GSequence& t,
                                 const std::vector<Homomorphism>& psi) {
    auto terms = t.expand();
    const auto& g = psi.front().codomain();
    int choices = static_cast<int>(psi.size()) + 1;
    std::vector<int> pick(terms.size(), 0);
    while (true) {
        int s = 0, len = 0;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (pick[i] == 0) continue;
            ++len;
            s = g.add_index(s, psi[pick[i] - 1].apply_index(terms[i]));
        }
        if (len > 0 && s == 0) return false;
        std::size_t i = 0;
        while (i < terms.size() && ++pick[i] == choices) pick[i++] = 0;
        if (i == terms.size()) break;
    }
    return true;
}

inline int weighted_davenport(const FiniteAbelianGroup& f,
                              const std::vector<Homomorphism>& psi) {
    int best = 0;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int last) -> void {
        if (!oracles::is_psi_zero_sum_free(GSequence::from_indices(f, stack), psi)) return;
        best = std::max(best, static_cast<int>(stack.size()));
        for (int a = last; a < f.order(); ++a) {
            stack.push_back(a);
            self(self, a);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return best + 1;
}

inline int davenport(const FiniteAbelianGroup& g) {
    int best = 0;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int last) -> void {
        if (!oracles::is_zero_sum_free(GSequence::from_indices(g, stack))) return;
        best = std::max(best, static_cast<int>(stack.size()));
        for (int a = last; a < g.order(); ++a) {
            stack.push_back(a);
            self(self, a);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return best + 1;
}

} // namespace oracles

namespace oracles_witness {

using zerosum::FiniteAbelianGroup;
using zerosum::GSequence;

// every nonempty zero-sum sub-multiset equals v (minimal_only filters
// to minimal offenders), by full expansion over subsets
inline bool all_zero_sums_equal(const GSequence& t, const GSequence& v,
                                bool minimal_only) {
    auto terms = t.expand();
    const auto& g = t.group();
    bool found_v = false;
    for (std::uint32_t mask = 1; mask < (1u << terms.size()); ++mask) {
        std::vector<int> sub;
        int s = 0;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (mask & (1u << i)) {
                sub.push_back(terms[i]);
                s = g.add_index(s, terms[i]);
            }
        if (s != 0) continue;
        auto w = GSequence::from_indices(g, sub);
        if (w == v) { found_v = true; continue; }
        if (minimal_only && !oracles::is_minimal_zero_sum(w)) continue;
        return false;
    }
    return found_v;
}

// unrestricted sweep over all length-t multisets
inline bool witness_exists(const FiniteAbelianGroup& g, const GSequence& v, int t,
                           bool minimal_only) {
    bool found = false;
    oracles::for_each_multiset(g, t, [&](const GSequence& cand) {
        if (found || cand.length() != t) return;
        if (all_zero_sums_equal(cand, v, minimal_only)) found = true;
    });
    return found;
}

} // namespace oracles_witness
