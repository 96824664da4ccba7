#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "zerosum/config.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

/// A homomorphism F -> G between finite abelian groups, given by the
/// images of the canonical generators of F. Well-definedness
/// (n_i * image_i = 0) is validated on construction, and the full value
/// table is precomputed since domains stay small.
class Homomorphism {
public:
    Homomorphism(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                 std::vector<GroupElement> gen_images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {
        if (static_cast<int>(gen_images.size()) != domain_.rank())
            throw InputError("expected " + std::to_string(domain_.rank()) +
                             " generator images, got " + std::to_string(gen_images.size()));
        gen_image_idx_.reserve(gen_images.size());
        for (std::size_t i = 0; i < gen_images.size(); ++i) {
            if (gen_images[i].group() != codomain_)
                throw InputError("generator image lies in the wrong group");
            int ni = domain_.factors()[i];
            if (codomain_.scalar_index(ni, gen_images[i].index()) != 0)
                throw InputError("not a homomorphism: order of generator " +
                                 std::to_string(i) + " does not kill its image");
            gen_image_idx_.push_back(gen_images[i].index());
        }
        table_.resize(static_cast<std::size_t>(domain_.order()));
        for (int x = 0; x < domain_.order(); ++x) {
            auto c = domain_.coords_of(x);
            int y = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                y = codomain_.add_index(y, codomain_.scalar_index(c[i], gen_image_idx_[i]));
            table_[x] = y;
        }
    }

    const FiniteAbelianGroup& domain() const { return domain_; }
    const FiniteAbelianGroup& codomain() const { return codomain_; }

    int apply_index(int x) const { return table_[x]; }

    GroupElement apply(const GroupElement& x) const {
        if (x.group() != domain_) throw InputError("argument not in the domain");
        return codomain_.element_at(table_[x.index()]);
    }

    GroupElement operator()(const GroupElement& x) const { return apply(x); }

    std::vector<GroupElement> gen_images() const {
        std::vector<GroupElement> out;
        for (int i : gen_image_idx_) out.push_back(codomain_.element_at(i));
        return out;
    }
    const std::vector<int>& gen_image_indices() const { return gen_image_idx_; }

    IndexSet kernel_idx() const {
        IndexSet out;
        for (int x = 0; x < domain_.order(); ++x)
            if (table_[x] == 0) out.push_back(x);
        return out;
    }

    IndexSet image_idx() const {
        IndexSet out(table_);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool is_zero_map() const {
        return std::all_of(gen_image_idx_.begin(), gen_image_idx_.end(),
                           [](int i) { return i == 0; });
    }

    bool operator==(const Homomorphism& other) const {
        return domain_ == other.domain_ && codomain_ == other.codomain_ &&
               gen_image_idx_ == other.gen_image_idx_;
    }

private:
    FiniteAbelianGroup domain_;
    FiniteAbelianGroup codomain_;
    std::vector<int> gen_image_idx_;
    std::vector<int> table_;
};

inline std::vector<GroupElement> kernel(const Homomorphism& h) {
    std::vector<GroupElement> out;
    for (int i : h.kernel_idx()) out.push_back(h.domain().element_at(i));
    return out;
}

inline std::vector<GroupElement> image(const Homomorphism& h) {
    std::vector<GroupElement> out;
    for (int i : h.image_idx()) out.push_back(h.codomain().element_at(i));
    return out;
}

/// g after f.
inline Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
    if (f.codomain() != g.domain())
        throw InputError("composition mismatch between codomain and domain");
    std::vector<GroupElement> images;
    for (int i : f.gen_image_indices())
        images.push_back(g.codomain().element_at(g.apply_index(i)));
    return {f.domain(), g.codomain(), std::move(images)};
}

/// All homomorphisms F -> G: the i-th generator image ranges over the
/// elements killed by n_i. The count is the product of those fibre
/// sizes and is guarded by `cap`.
inline std::vector<Homomorphism> enumerate_homs(const FiniteAbelianGroup& f,
                                                const FiniteAbelianGroup& g,
                                                std::int64_t cap = 1'000'000) {
    std::vector<std::vector<int>> candidates(f.rank());
    std::int64_t total = 1;
    for (int i = 0; i < f.rank(); ++i) {
        int ni = f.factors()[i];
        for (int x = 0; x < g.order(); ++x)
            if (g.order_of_index(x) != 0 && ni % g.order_of_index(x) == 0)
                candidates[i].push_back(x);
        total *= static_cast<std::int64_t>(candidates[i].size());
        if (total > cap) throw CapExceeded("homomorphism enumeration exceeds cap");
    }
    std::vector<Homomorphism> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> pick(f.rank(), 0);
    while (true) {
        std::vector<GroupElement> images;
        for (int i = 0; i < f.rank(); ++i)
            images.push_back(g.element_at(candidates[i][pick[i]]));
        out.emplace_back(f, g, std::move(images));
        int i = f.rank() - 1;
        while (i >= 0 && ++pick[i] == static_cast<int>(candidates[i].size())) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

// --- quotients and direct sums -----------------------------------------
//
// Quotients F/H are materialized extensionally (a coset table), a basis
// is extracted by the maximal-order-element recursion, and the result
// is re-expressed in invariant-factor form together with the explicit
// projection. This stays cheap because every group here has order at
// most a few hundred.

namespace detail {

struct ExtGroup {
    int n = 0;
    std::vector<int> add; // n*n
    int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }

    int order_of(int x) const {
        if (x == 0) return 1;
        int y = x, k = 1;
        while (y != 0) { y = plus(y, x); ++k; }
        return k;
    }

    int times(int k, int x) const {
        int y = 0;
        for (int i = 0; i < k; ++i) y = plus(y, x);
        return y;
    }
};

struct ExtBasis {
    std::vector<int> elements; // basis elements, orders ascending chain
    std::vector<int> orders;
};

/// Basis of an extensional finite abelian group: pick an element of
/// maximal order, recurse on the quotient by it, and lift the quotient
/// basis back, adjusting each lift so its order is preserved.
inline ExtBasis ext_decompose(const ExtGroup& g) {
    if (g.n == 1) return {};
    int x = 0, m = 1;
    for (int e = 0; e < g.n; ++e) {
        int o = g.order_of(e);
        if (o > m) { m = o; x = e; }
    }
    std::vector<int> pow_x; // the cyclic subgroup generated by x, in power order
    pow_x.reserve(m);
    for (int e = 0, i = 0; i < m; ++i, e = g.plus(e, x)) pow_x.push_back(e);
    std::vector<int> in_cyc(g.n, -1);
    for (int j = 0; j < m; ++j) in_cyc[pow_x[j]] = j;

    // quotient by <x>
    std::vector<int> coset_of(g.n, -1), reps;
    for (int e = 0; e < g.n; ++e) {
        if (coset_of[e] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(e);
        for (int j = 0; j < m; ++j) coset_of[g.plus(e, pow_x[j])] = id;
    }
    ExtGroup q;
    q.n = static_cast<int>(reps.size());
    q.add.resize(static_cast<std::size_t>(q.n) * q.n);
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            q.add[static_cast<std::size_t>(a) * q.n + b] = coset_of[g.plus(reps[a], reps[b])];
    // quotient zero is the coset of 0, which holds rep index 0
    if (coset_of[0] != 0) throw Falsification("quotient zero coset misplaced");

    ExtBasis inner = ext_decompose(q);
    ExtBasis out;
    for (std::size_t i = 0; i < inner.elements.size(); ++i) {
        int q_ord = inner.orders[i];
        int y0 = reps[inner.elements[i]];
        int z = g.times(q_ord, y0); // lands in <x>
        int j = in_cyc[z];
        if (j < 0 || j % q_ord != 0)
            throw Falsification("basis lift failed order bookkeeping");
        int y = g.plus(y0, g.times(m - (j / q_ord) % m, x));
        if (g.order_of(y) != q_ord)
            throw Falsification("basis lift produced wrong order");
        out.elements.push_back(y);
        out.orders.push_back(q_ord);
    }
    out.elements.push_back(x);
    out.orders.push_back(m);
    return out;
}

inline std::vector<std::pair<int, int>> prime_power_factors(int m) {
    std::vector<std::pair<int, int>> out; // (p, e)
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

} // namespace detail

struct QuotientProjection {
    FiniteAbelianGroup quotient;
    Homomorphism projection; // F -> quotient, kernel = H
};

/// The quotient F/H in invariant-factor form, with the canonical
/// projection. The kernel is re-checked extensionally.
inline QuotientProjection quotient_projection(const FiniteAbelianGroup& f,
                                              const IndexSet& h) {
    auto part = cosets(f, h); // validates the subgroup
    detail::ExtGroup ext;
    ext.n = static_cast<int>(part.reps.size());
    ext.add.resize(static_cast<std::size_t>(ext.n) * ext.n);
    for (int a = 0; a < ext.n; ++a)
        for (int b = 0; b < ext.n; ++b)
            ext.add[static_cast<std::size_t>(a) * ext.n + b] =
                part.coset_of[f.add_index(part.reps[a], part.reps[b])];

    auto basis = detail::ext_decompose(ext);
    FiniteAbelianGroup q(basis.orders);

    // coordinates of every coset with respect to the basis
    std::vector<int> coords_of(ext.n, -1);
    int tuples = static_cast<int>(q.order());
    for (int t = 0; t < tuples; ++t) {
        auto c = q.coords_of(t);
        int e = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            e = ext.plus(e, ext.times(c[i], basis.elements[i]));
        if (coords_of[e] != -1) throw Falsification("quotient basis is not independent");
        coords_of[e] = t;
    }

    std::vector<GroupElement> gen_images;
    for (int i = 0; i < f.rank(); ++i) {
        int coset = part.coset_of[f.generator(i).index()];
        gen_images.push_back(q.element_at(coords_of[coset]));
    }
    QuotientProjection out{q, Homomorphism(f, q, std::move(gen_images))};
    if (out.projection.kernel_idx() != h)
        throw Falsification("quotient projection kernel differs from the subgroup");
    return out;
}

struct DirectSum {
    FiniteAbelianGroup sum;
    std::vector<Homomorphism> injections; // one per part
};

/// Direct sum of invariant-factor groups, renormalized to a single
/// invariant-factor chain. Injections are assembled prime power by
/// prime power via the CRT splitting of each cyclic factor.
inline DirectSum direct_sum_with_injections(const std::vector<FiniteAbelianGroup>& parts) {
    struct Slot { int part; int factor; int p; int e; int pos = -1; };
    std::vector<Slot> slots;
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
        for (int fi = 0; fi < parts[pi].rank(); ++fi)
            for (auto [p, e] : detail::prime_power_factors(parts[pi].factors()[fi]))
                slots.push_back({static_cast<int>(pi), fi, p, e});

    // per prime, largest exponents go to the largest invariant factor
    std::vector<int> primes;
    for (const auto& s : slots) primes.push_back(s.p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::size_t chain_len = 0;
    for (int p : primes) {
        std::vector<std::size_t> of_p;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (slots[i].p == p) of_p.push_back(i);
        std::sort(of_p.begin(), of_p.end(), [&](std::size_t a, std::size_t b) {
            return slots[a].e > slots[b].e;
        });
        for (std::size_t k = 0; k < of_p.size(); ++k) slots[of_p[k]].pos = static_cast<int>(k);
        chain_len = std::max(chain_len, of_p.size());
    }

    std::vector<std::int64_t> big(chain_len, 1); // descending chain
    for (const auto& s : slots) {
        std::int64_t q = 1;
        for (int i = 0; i < s.e; ++i) q *= s.p;
        big[s.pos] *= q;
    }
    std::vector<int> factors;
    for (auto it = big.rbegin(); it != big.rend(); ++it)
        factors.push_back(static_cast<int>(*it));
    FiniteAbelianGroup sum(factors);

    DirectSum out{sum, {}};
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        std::vector<GroupElement> images;
        for (int fi = 0; fi < parts[pi].rank(); ++fi) {
            std::vector<int> coords(sum.rank(), 0);
            for (const auto& s : slots) {
                if (s.part != static_cast<int>(pi) || s.factor != fi) continue;
                int ascending = static_cast<int>(chain_len) - 1 - s.pos;
                std::int64_t n = sum.factors()[ascending];
                std::int64_t q = 1;
                for (int i = 0; i < s.e; ++i) q *= s.p;
                // CRT unit: 1 mod q, 0 mod n/q
                std::int64_t u = (n / q) * detail::mod_inverse(n / q, q) % n;
                coords[ascending] = static_cast<int>((coords[ascending] + u) % n);
            }
            images.push_back(sum.element(coords));
        }
        out.injections.emplace_back(parts[pi], sum, std::move(images));
    }

    std::int64_t prod = 1;
    for (const auto& p : parts) prod *= p.order();
    if (prod != sum.order()) throw Falsification("direct sum order bookkeeping failed");
    for (const auto& inj : out.injections)
        if (inj.kernel_idx() != IndexSet{0})
            throw Falsification("direct sum injection is not injective");
    return out;
}

} // namespace zerosum
