#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/config.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/hom.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

/// A finite nonempty set of homomorphisms F -> G acting as weights.
/// Members are validated and deduplicated; per-element image sets are
/// precomputed since they drive every reachability step.
class WeightSet {
public:
    WeightSet(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
              std::vector<Homomorphism> homs)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          homs_(std::move(homs)) {
        if (homs_.empty()) throw InputError("weight set must be nonempty");
        for (const auto& h : homs_) {
            if (h.domain() != domain_ || h.codomain() != codomain_)
                throw InputError("weight with mismatched domain or codomain");
        }
        for (std::size_t i = 0; i < homs_.size(); ++i)
            for (std::size_t j = i + 1; j < homs_.size(); ++j)
                if (homs_[i] == homs_[j])
                    throw InputError("duplicate weight homomorphism");
        images_.resize(static_cast<std::size_t>(domain_.order()));
        for (int x = 0; x < domain_.order(); ++x) {
            for (const auto& h : homs_) images_[x].push_back(h.apply_index(x));
            std::sort(images_[x].begin(), images_[x].end());
            images_[x].erase(std::unique(images_[x].begin(), images_[x].end()),
                             images_[x].end());
        }
    }

    static WeightSet identity(const FiniteAbelianGroup& g) {
        std::vector<GroupElement> gens;
        for (int i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
        return {g, g, {Homomorphism(g, g, gens)}};
    }

    static WeightSet plus_minus(const FiniteAbelianGroup& g) {
        std::vector<GroupElement> gens, negs;
        for (int i = 0; i < g.rank(); ++i) {
            gens.push_back(g.generator(i));
            negs.push_back(-g.generator(i));
        }
        std::vector<Homomorphism> homs;
        homs.emplace_back(g, g, gens);
        Homomorphism neg(g, g, negs);
        if (!(neg == homs.front())) homs.push_back(std::move(neg));
        return {g, g, std::move(homs)};
    }

    const FiniteAbelianGroup& domain() const { return domain_; }
    const FiniteAbelianGroup& codomain() const { return codomain_; }
    const std::vector<Homomorphism>& homs() const { return homs_; }
    int size() const { return static_cast<int>(homs_.size()); }

    /// distinct images {psi(x)} of one domain element
    const std::vector<int>& images_of(int x) const { return images_[x]; }

private:
    FiniteAbelianGroup domain_;
    FiniteAbelianGroup codomain_;
    std::vector<Homomorphism> homs_;
    std::vector<std::vector<int>> images_;
};

namespace detail {

inline Bitset psi_reach_bitset(const GSequence& t, const WeightSet& psi) {
    const auto& g = psi.codomain();
    int n = static_cast<int>(g.order());
    Bitset reach(n);
    for (auto [a, m] : t.terms()) {
        for (int k = 0; k < m; ++k) {
            Bitset next = reach;
            for (int img : psi.images_of(a)) {
                next.set(img);
                reach.for_each([&](int x) { next.set(g.add_index(x, img)); });
            }
            reach = next;
        }
    }
    return reach;
}

} // namespace detail

/// Sums of all nonempty weighted selections from T: pick a subsequence
/// and apply one weight per term.
inline std::vector<GroupElement> psi_reachable(const GSequence& t, const WeightSet& psi) {
    if (t.group() != psi.domain()) throw InputError("sequence not over the weight domain");
    std::vector<GroupElement> out;
    detail::psi_reach_bitset(t, psi).for_each(
        [&](int i) { out.push_back(psi.codomain().element_at(i)); });
    return out;
}

inline bool is_psi_zero_sum_free(const GSequence& t, const WeightSet& psi) {
    if (t.group() != psi.domain()) throw InputError("sequence not over the weight domain");
    return !detail::psi_reach_bitset(t, psi).test(0);
}

/// Weighted Davenport constant: one plus the longest weighted-zero-sum
/// free sequence over the domain. The per-weight image sequences of a
/// free sequence are zero-sum free over the codomain, so their subsum
/// growth bounds the remaining depth.
inline InvariantResult weighted_davenport(const FiniteAbelianGroup& f,
                                          const FiniteAbelianGroup& g,
                                          const WeightSet& psi,
                                          const SearchLimits& limits = {}) {
    if (psi.domain() != f || psi.codomain() != g)
        throw InputError("weight set does not match the given groups");
    int nf = static_cast<int>(f.order());
    int ng = static_cast<int>(g.order());
    detail::NodeBudget budget(limits.node_cap);

    struct State {
        detail::Bitset reach;                    // weighted selection sums
        std::vector<detail::Bitset> image_sums;  // per weight, subsums of the image
    };

    auto extend = [&](const State& s, int a) -> std::optional<State> {
        for (int img : psi.images_of(a)) {
            if (img == 0 || s.reach.test(g.neg_index(img))) return std::nullopt;
        }
        State next = s;
        // the added copy uses exactly one weight, so every union is
        // taken against the parent's reach
        detail::Bitset acc = s.reach;
        for (int img : psi.images_of(a)) {
            acc.set(img);
            s.reach.for_each([&](int x) { acc.set(g.add_index(x, img)); });
        }
        next.reach = std::move(acc);
        if (next.reach.test(0)) return std::nullopt;
        for (std::size_t w = 0; w < psi.homs().size(); ++w) {
            int img = psi.homs()[w].apply_index(a);
            detail::Bitset im = s.image_sums[w];
            s.image_sums[w].for_each([&](int x) { im.set(g.add_index(x, img)); });
            im.set(img);
            next.image_sums[w] = std::move(im);
        }
        return next;
    };

    struct Sub { int best = 0; std::vector<int> witness; };
    auto run_subtree = [&](int first, const State& root) -> Sub {
        Sub out;
        std::vector<int> stack;
        auto rec = [&](auto&& self, const State& s, int last) -> void {
            budget.tick();
            if (static_cast<int>(stack.size()) > out.best) {
                out.best = static_cast<int>(stack.size());
                out.witness = stack;
            }
            int room = ng - 1;
            for (const auto& im : s.image_sums) room = std::min(room, ng - 1 - im.count());
            if (static_cast<int>(stack.size()) + room <= out.best) return;
            for (int a = last; a < nf; ++a) {
                auto next = extend(s, a);
                if (!next) continue;
                stack.push_back(a);
                self(self, *next, a);
                stack.pop_back();
            }
        };
        auto start = extend(root, first);
        if (start) {
            stack.push_back(first);
            rec(rec, *start, first);
        }
        return out;
    };

    State root{detail::Bitset(ng), std::vector<detail::Bitset>(psi.homs().size(),
                                                               detail::Bitset(ng))};
    std::vector<int> firsts;
    for (int a = 0; a < nf; ++a) firsts.push_back(a);
    std::vector<Sub> subs(firsts.size());
    int workers = std::max(1, limits.workers);
    if (workers == 1 || firsts.size() < 2) {
        for (std::size_t i = 0; i < firsts.size(); ++i) subs[i] = run_subtree(firsts[i], root);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> cursor{0};
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = cursor.fetch_add(1); i < firsts.size();
                     i = cursor.fetch_add(1))
                    subs[i] = run_subtree(firsts[i], root);
            }));
        for (auto& fut : futs) fut.get();
    }

    int best = 0;
    std::vector<int> witness;
    for (const auto& s : subs)
        if (s.best > best) { best = s.best; witness = s.witness; }
    return {best + 1, false, GSequence::from_indices(f, witness)};
}

namespace detail {

/// Can some weighted selection from t realize the multiset `member`?
/// Counting form of the assignment problem: distribute each image
/// value's demanded multiplicity over compatible terms of t without
/// exceeding term multiplicities.
inline bool psi_image_matches(const GSequence& t, const WeightSet& psi,
                              const GSequence& member) {
    if (member.length() > t.length()) return false;
    const auto& terms = t.terms();
    std::vector<int> capacity;
    capacity.reserve(terms.size());
    for (auto [a, m] : terms) capacity.push_back(m);

    const auto& want = member.terms();
    auto rec = [&](auto&& self, std::size_t wi, int still, std::size_t ti) -> bool {
        if (still == 0) {
            ++wi;
            if (wi == want.size()) return true;
            return self(self, wi, want[wi].second, 0);
        }
        if (ti == terms.size()) return false;
        int a = terms[ti].first;
        int target = want[wi].first;
        bool compatible = std::binary_search(psi.images_of(a).begin(),
                                             psi.images_of(a).end(), target);
        int max_take = compatible ? std::min(capacity[ti], still) : 0;
        for (int take = max_take; take >= 0; --take) {
            capacity[ti] -= take;
            if (self(self, wi, still - take, ti + 1)) return true;
            capacity[ti] += take;
        }
        return false;
    };
    if (want.empty()) return true;
    return rec(rec, 0, want[0].second, 0);
}

inline bool psi_hits_omega(const GSequence& t, const WeightSet& psi,
                           const OmegaSet& omega, bool zero_sum_closed) {
    if (zero_sum_closed) return psi_reach_bitset(t, psi).test(0);
    for (const auto& member : omega.members())
        if (psi_image_matches(t, psi, member)) return true;
    return false;
}

} // namespace detail

/// Weighted universal invariant: least length forcing some weighted
/// selection of the sequence into omega. Omega lives over the
/// codomain. When omega is just "all nonempty zero-sum sequences" (up
/// to a sufficient length horizon) the reachability shortcut applies;
/// otherwise each member is matched exactly.
inline InvariantResult d_omega_psi(const FiniteAbelianGroup& f,
                                   const FiniteAbelianGroup& g, const WeightSet& psi,
                                   const OmegaSet& omega,
                                   const SearchLimits& limits = {}) {
    if (psi.domain() != f || psi.codomain() != g)
        throw InputError("weight set does not match the given groups");
    if (omega.group() != g) throw InputError("omega set over the wrong group");
    if (omega.empty()) throw InputError("omega must be nonempty");

    int nf = static_cast<int>(f.order());
    int cap = limits.effective_length_cap(nf);
    bool closed = omega.zero_sum_family() &&
                  omega.is_zero_sum_closed_up_to(davenport(g, limits).value);
    detail::NodeBudget budget(limits.node_cap);

    int best = 0;
    std::vector<int> best_witness, stack;
    bool capped = false;
    auto rec = [&](auto&& self, int last) -> void {
        if (capped) return;
        budget.tick();
        if (static_cast<int>(stack.size()) > best) {
            best = static_cast<int>(stack.size());
            best_witness = stack;
            if (best >= cap) { capped = true; return; }
        }
        for (int a = last; a < nf; ++a) {
            stack.push_back(a);
            auto t = GSequence::from_indices(f, stack);
            if (!detail::psi_hits_omega(t, psi, omega, closed)) self(self, a);
            stack.pop_back();
            if (capped) return;
        }
    };
    rec(rec, 0);
    return {capped ? cap : best + 1, capped, GSequence::from_indices(f, best_witness)};
}

/// Greedy minimal subset preserving the weighted invariant value t,
/// mirroring the unweighted minimalization.
inline OmegaSet weighted_minimalize(const FiniteAbelianGroup& f,
                                    const FiniteAbelianGroup& g, const WeightSet& psi,
                                    const OmegaSet& a, int t,
                                    const SearchLimits& limits = {}) {
    SearchLimits local = limits;
    local.length_cap = std::max(limits.effective_length_cap(f.order()), t + 1);
    auto da = d_omega_psi(f, g, psi, a, local);
    if (da.above_cap || da.value != t)
        throw InputError("weighted minimalize requires d(A) = t");

    std::vector<GSequence> cur;
    for (const auto& v : a.members())
        if (v.length() <= t) cur.push_back(v);
    {
        auto dt = d_omega_psi(f, g, psi, OmegaSet(g, cur, "trunc"), local);
        if (dt.above_cap || dt.value != t)
            throw Falsification("length-t truncation changed the weighted invariant");
    }
    std::size_t i = 0;
    while (i < cur.size()) {
        if (cur.size() == 1) break;
        std::vector<GSequence> rest;
        rest.reserve(cur.size() - 1);
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (j != i) rest.push_back(cur[j]);
        auto dd = d_omega_psi(f, g, psi, OmegaSet(g, rest, "probe"), local);
        if (!dd.above_cap && dd.value == t)
            cur = std::move(rest);
        else
            ++i;
    }
    return {g, std::move(cur), a.provenance() + ":minimalized:t=" + std::to_string(t)};
}

struct KernelCosetBoundReport {
    int bound = 0;        // cosets of the best kernel meeting X, plus one
    int best_weight = -1; // index into psi.homs() of the minimizing weight
    InvariantResult dpsi;
    bool holds = false; // dpsi <= bound
};

/// Coset bound on the weighted Davenport constant: with X the domain
/// elements outside every kernel, the number of cosets of one kernel
/// meeting X plus one already forces a weighted zero-sum.
inline KernelCosetBoundReport kernel_coset_bound(const FiniteAbelianGroup& f,
                                                 const FiniteAbelianGroup& g,
                                                 const WeightSet& psi,
                                                 const SearchLimits& limits = {}) {
    if (psi.domain() != f || psi.codomain() != g)
        throw InputError("weight set does not match the given groups");
    int nf = static_cast<int>(f.order());
    std::vector<bool> in_kernel(nf, false);
    for (const auto& h : psi.homs())
        for (int x = 0; x < nf; ++x)
            if (h.apply_index(x) == 0) in_kernel[x] = true;

    int best = -1, best_w = -1;
    for (std::size_t w = 0; w < psi.homs().size(); ++w) {
        auto part = cosets(f, psi.homs()[w].kernel_idx());
        int meeting = 0;
        for (const auto& members : part.members) {
            bool meets = false;
            for (int x : members)
                if (!in_kernel[x]) { meets = true; break; }
            if (meets) ++meeting;
        }
        if (best < 0 || meeting < best) { best = meeting; best_w = static_cast<int>(w); }
    }

    KernelCosetBoundReport rep{best + 1, best_w, weighted_davenport(f, g, psi, limits),
                               false};
    rep.holds = !rep.dpsi.above_cap && rep.dpsi.value <= rep.bound;
    return rep;
}

// --- bounded integer demonstration with scalar weights --------------------

/// Configuration of the bounded integer demo: terms range over
/// [-term_bound, term_bound] and scalar weights over the nonzero
/// integers in [-weight_bound, weight_bound].
struct IntWeightDemo {
    int term_bound = 10;
    int weight_bound = 10;
};

struct ScalarWeightDemoReport {
    bool singletons_free = false;       // no nonzero scalar kills a nonzero term
    bool pairs_all_witnessed = false;   // every pair admits a weighted zero-sum
    int max_required_weight = 0;        // largest weight any pair needed
    std::int64_t pairs_checked = 0;
    struct Pair {
        int a = 0, b = 0;
        int k1 = 0, k2 = 0;  // witnessing weights, when witnessed
        int min_weight_bound = 0;
        bool witnessed = false;
    };
    std::vector<Pair> unwitnessed;      // pairs the weight bound could not serve
    bool obstruction_holds = false;     // (2n)(-2n) has no image in {n(-n), 0}
    int obstructions_checked = 0;
    bool all_hold() const {
        return singletons_free && pairs_all_witnessed && obstruction_holds;
    }
};

/// The integer groups cannot be enumerated, so the scalar-weight story
/// is verified on a box: every nonzero singleton stays free, every
/// pair is killed by the cross weights (b, -a) reduced by the gcd, and
/// the doubled pair (2n)(-2n) has no weighted image equal to n(-n) or
/// to the singleton zero, which is the obstruction to a minimal set.
inline ScalarWeightDemoReport integer_scalar_weight_demo(const IntWeightDemo& cfg) {
    if (cfg.term_bound < 1 || cfg.weight_bound < 1)
        throw InputError("demo bounds must be at least 1");
    const int B = cfg.term_bound, K = cfg.weight_bound;
    ScalarWeightDemoReport rep;

    rep.singletons_free = true;
    for (int a = -B; a <= B && rep.singletons_free; ++a) {
        if (a == 0) continue;
        for (int k = -K; k <= K; ++k) {
            if (k == 0) continue;
            if (static_cast<std::int64_t>(k) * a == 0) { rep.singletons_free = false; break; }
        }
    }

    rep.pairs_all_witnessed = true;
    for (int a = -B; a <= B; ++a) {
        for (int b = a; b <= B; ++b) {
            ++rep.pairs_checked;
            ScalarWeightDemoReport::Pair p;
            p.a = a;
            p.b = b;
            if (a == 0 || b == 0) {
                // single-term selection of the zero term, weight 1
                p.min_weight_bound = 1;
                p.k1 = a == 0 ? 1 : 0;
                p.k2 = a == 0 ? 0 : 1;
                p.witnessed = true;
            } else {
                int g = std::gcd(std::abs(a), std::abs(b));
                p.k1 = b / g;
                p.k2 = -a / g;
                p.min_weight_bound = std::max(std::abs(p.k1), std::abs(p.k2));
                p.witnessed = p.min_weight_bound <= K;
                if (static_cast<std::int64_t>(p.k1) * a +
                        static_cast<std::int64_t>(p.k2) * b != 0)
                    throw Falsification("cross weights do not cancel the pair");
            }
            rep.max_required_weight = std::max(rep.max_required_weight, p.min_weight_bound);
            if (!p.witnessed) {
                rep.pairs_all_witnessed = false;
                rep.unwitnessed.push_back(p);
            }
        }
    }

    rep.obstruction_holds = true;
    for (int n = 1; 2 * n <= B; ++n) {
        ++rep.obstructions_checked;
        // weighted images of (2n)(-2n): k1*(2n), k2*(-2n), or the pair
        bool bad = false;
        for (int k = -K; k <= K && !bad; ++k) {
            if (k == 0) continue;
            std::int64_t s1 = static_cast<std::int64_t>(k) * (2 * n);
            if (s1 == 0) bad = true; // would be the singleton zero sequence
        }
        for (int k1 = -K; k1 <= K && !bad; ++k1) {
            if (k1 == 0) continue;
            for (int k2 = -K; k2 <= K && !bad; ++k2) {
                if (k2 == 0) continue;
                std::int64_t x = static_cast<std::int64_t>(k1) * (2 * n);
                std::int64_t y = static_cast<std::int64_t>(k2) * (-2 * n);
                // image multiset {x, y} equal to {n, -n}?
                if ((x == n && y == -n) || (x == -n && y == n)) bad = true;
            }
        }
        if (bad) rep.obstruction_holds = false;
    }
    return rep;
}

} // namespace zerosum
