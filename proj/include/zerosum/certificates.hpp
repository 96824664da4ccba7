#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

/// Multiset of positive integers, used by the integer-sequence
/// helpers below. Order carries no meaning.
using IntSequence = std::vector<int>;

namespace detail {

/// Bitset of sums reachable by nonempty subsets of a positive integer
/// multiset; position 0 stays unset.
inline std::vector<bool> int_subset_sums(const IntSequence& t) {
    int total = std::accumulate(t.begin(), t.end(), 0);
    std::vector<bool> reach(total + 1, false);
    for (int h : t) {
        if (h < 1) throw InputError("integer sequence terms must be positive");
        for (int s = total - h; s >= 1; --s)
            if (reach[s]) reach[s + h] = true;
        reach[h] = true;
    }
    return reach;
}

inline bool sums_fill_interval(const IntSequence& t) {
    auto reach = int_subset_sums(t);
    for (std::size_t s = 1; s < reach.size(); ++s)
        if (!reach[s]) return false;
    return true;
}

} // namespace detail

/// For a positive integer multiset T with sum(T) <= 2|T| - 3, a marked
/// term h_t > 1 and a target x in [h_t, sum(T) - h_t], produce two
/// subsequences of T with sum x and different lengths. The pair is the
/// constructive one: pad with ones around the largest prefix of the
/// sorted non-unit terms that still fits under x.
inline std::pair<IntSequence, IntSequence> equal_sum_distinct_lengths(
    const IntSequence& t, int marked, int x) {
    int ell = static_cast<int>(t.size());
    if (marked < 0 || marked >= ell) throw InputError("marked index out of range");
    int total = std::accumulate(t.begin(), t.end(), 0);
    for (int h : t)
        if (h < 1) throw InputError("integer sequence terms must be positive");
    if (total > 2 * ell - 3)
        throw InputError("sum exceeds 2*length - 3");
    if (t[marked] <= 1) throw InputError("marked term must exceed 1");
    if (x < t[marked] || x > total - t[marked])
        throw InputError("target out of range");

    IntSequence sorted(t);
    std::sort(sorted.begin(), sorted.end());
    int s = 0;
    while (s < ell && sorted[s] == 1) ++s;
    // x >= t[marked] >= sorted[s] and x <= total - sorted[s], so working
    // with the smallest non-unit term covers the whole target range.

    auto build = [&](int ones, int lo, int hi) { // terms sorted[lo..hi)
        IntSequence v(static_cast<std::size_t>(ones), 1);
        for (int i = lo; i < hi; ++i) v.push_back(sorted[i]);
        return v;
    };

    IntSequence v1, v2;
    if (s + 1 == ell) {
        v1 = build(x, 0, 0);
        v2 = build(x - sorted[s], s, s + 1);
    } else {
        int m = s; // largest m with sorted[s..m] summing at most x
        int run = 0;
        while (m + 1 <= ell && run + sorted[m] <= x) { run += sorted[m]; ++m; }
        --m;
        run -= sorted[m];
        if (m < ell - 1) {
            v1 = build(x - run, s, m);
            v2 = build(x - run - sorted[m], s, m + 1);
        } else {
            int tail = run + sorted[m] - sorted[s]; // sum of sorted[s+1..ell)
            v1 = build(x - tail, s + 1, ell);
            v2 = build(x - tail - sorted[s], s, ell);
        }
    }

    auto check = [&](const IntSequence& v) {
        if (std::accumulate(v.begin(), v.end(), 0) != x)
            throw Falsification("constructed subsequence has the wrong sum");
        IntSequence rest(sorted);
        for (int h : v) {
            auto it = std::find(rest.begin(), rest.end(), h);
            if (it == rest.end()) throw Falsification("constructed pair is not a subsequence");
            rest.erase(it);
        }
    };
    check(v1);
    check(v2);
    if (v1.size() == v2.size())
        throw Falsification("constructed pair does not have distinct lengths");
    return {v1, v2};
}

/// For a positive integer multiset whose subset sums fill the whole
/// interval [1, sum(T)] and whose sum exceeds the number of ones,
/// return the position of a term h with 1 < h <= (#ones) + 1.
inline int find_bounded_nonunit_term(const IntSequence& t) {
    int total = std::accumulate(t.begin(), t.end(), 0);
    int ones = static_cast<int>(std::count(t.begin(), t.end(), 1));
    if (total <= ones) throw InputError("sum must exceed the number of ones");
    if (!detail::sums_fill_interval(t))
        throw InputError("subset sums do not fill the interval");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] > 1 && t[i] <= ones + 1) return static_cast<int>(i);
    throw Falsification("no bounded non-unit term exists");
}

/// Generator certificate for long zero-sum free sequences over a
/// cyclic group (|T| > n/2, n >= 3): some generator g simultaneously
/// keeps the index sum below n, makes the index subset sums an
/// interval (so the subsums of T are an initial segment of multiples
/// of g), and appears at least as often as any term's index.
/// Returns the first such generator; nullopt would contradict a known
/// theorem and is treated as a falsification by callers.
inline std::optional<GroupElement> savchev_chen_generator(const GSequence& t) {
    const auto& g = t.group();
    int n = static_cast<int>(g.order());
    if (!g.is_cyclic() || n < 3) throw InputError("requires a cyclic group of order >= 3");
    if (!is_zero_sum_free(t)) throw InputError("sequence must be zero-sum free");
    if (2 * t.length() <= n) throw InputError("sequence must be longer than n/2");

    auto subsums = detail::subsum_bitset(t);
    for (int gi = 1; gi < n; ++gi) {
        if (g.order_of_index(gi) != n) continue;
        auto gen = g.element_at(gi);
        IntSequence indices;
        std::int64_t sum = 0;
        int vg = 0;
        bool dominated = true;
        for (auto [i, m] : t.terms()) {
            int s = ind(g, gen, g.element_at(i));
            for (int k = 0; k < m; ++k) indices.push_back(s);
            sum += static_cast<std::int64_t>(m) * s;
            if (i == gi) vg = m;
        }
        if (sum >= n) continue;
        for (int s : indices)
            if (vg < s) { dominated = false; break; }
        if (!dominated) continue;
        if (!detail::sums_fill_interval(indices)) continue;
        // subsums of T must be exactly {g, 2g, ..., (sum) g}
        detail::Bitset expect(n);
        int acc = 0;
        for (int i = 1; i <= sum; ++i) {
            acc = g.add_index(acc, gi);
            expect.set(acc);
        }
        if (!(expect == subsums)) continue;
        return gen;
    }
    return std::nullopt;
}

/// Two nonempty zero-sum subsequences of T with different lengths.
/// Guaranteed to exist over a cyclic group when |T| >= n >= 3 and T
/// has at least three distinct terms; nullopt is a falsification.
inline std::optional<std::pair<GSequence, GSequence>> graham_pair(const GSequence& t) {
    const auto& g = t.group();
    int n = static_cast<int>(g.order());
    if (!g.is_cyclic() || n < 3) throw InputError("requires a cyclic group of order >= 3");
    if (t.length() < n) throw InputError("sequence must have length at least |G|");
    if (t.support_size() < 3) throw InputError("sequence must have at least 3 distinct terms");

    // walk sub-multisets; keep the first zero-sum of each length
    const auto& terms = t.terms();
    std::vector<std::optional<GSequence>> by_len(t.length() + 1);
    std::optional<std::pair<GSequence, GSequence>> found;
    std::vector<std::pair<int, int>> chosen;

    auto rec = [&](auto&& self, std::size_t pos, int len, int sum) -> bool {
        if (pos == terms.size()) {
            if (len == 0 || sum != 0) return false;
            if (!by_len[len]) {
                by_len[len] = GSequence::from_counts(g, chosen);
                for (int other = 1; other <= t.length(); ++other) {
                    if (other != len && by_len[other]) {
                        found = {*by_len[other], *by_len[len]};
                        return true;
                    }
                }
            }
            return false;
        }
        auto [a, m] = terms[pos];
        int add = 0;
        for (int take = 0; take <= m; ++take) {
            if (take > 0) {
                add = g.add_index(add, a);
                chosen.emplace_back(a, take);
            }
            bool done = self(self, pos + 1, len + take, g.add_index(sum, add));
            if (take > 0) chosen.pop_back();
            if (done) return true;
        }
        return false;
    };
    rec(rec, 0, 0, 0);
    if (found && found->first.length() > found->second.length())
        std::swap(found->first, found->second);
    return found;
}

struct ElementaryTwoCertificate {
    bool squarefree = false;
    bool independent = false;
    bool zero_sum_free = false; // = squarefree && independent
};

/// Structural zero-sum-freeness certificate over Z_2^r: squarefree
/// support that is linearly independent over the two-element field.
/// The structural verdict is cross-checked against the subset-sum
/// computation; disagreement is a falsification.
inline ElementaryTwoCertificate elementary2_zero_sum_free_cert(const GSequence& s) {
    const auto& g = s.group();
    if (!g.is_elementary_two_group() || g.is_trivial())
        throw InputError("requires an elementary 2-group");

    ElementaryTwoCertificate cert;
    cert.squarefree = std::all_of(s.terms().begin(), s.terms().end(),
                                  [](auto p) { return p.second == 1; });

    // Gaussian elimination over GF(2); indices are already bitmasks of
    // coordinates since every factor is 2.
    std::vector<std::uint32_t> slot(32, 0); // by highest set bit
    bool indep = true;
    for (auto [i, m] : s.terms()) {
        std::uint32_t v = static_cast<std::uint32_t>(i);
        while (v != 0) {
            int h = 31 - __builtin_clz(v);
            if (slot[h] == 0) { slot[h] = v; break; }
            v ^= slot[h];
        }
        if (v == 0) { indep = false; break; }
    }
    cert.independent = indep;
    cert.zero_sum_free = cert.squarefree && cert.independent;

    if (cert.zero_sum_free != is_zero_sum_free(s))
        throw Falsification("structural certificate disagrees with subset-sum check");
    return cert;
}

} // namespace zerosum
