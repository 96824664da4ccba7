#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "zerosum/errors.hpp"

namespace zerosum {

class GroupElement;

namespace detail {

/// Small dynamic bitset over the elements of one group (indices
/// 0..n-1). Used as the subset-sum accumulator in all the searches.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool operator==(const Bitset&) const = default;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                fn(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct GroupData {
    std::vector<int> factors;   // invariant factors, divisibility chain
    std::int64_t order = 1;
    int exponent = 1;
    std::vector<int> radix;     // mixed-radix weight of each coordinate
    std::vector<int> add_table; // order*order, present when order is small
    std::vector<int> neg_table;
    std::vector<int> order_table;
};

inline int mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = a % m;
    if (a1 < 0) a1 += m;
    std::int64_t b = a1;
    while (b) {
        std::int64_t q = g / b;
        g -= q * b; std::swap(g, b);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw InputError("element not invertible modulo " + std::to_string(m));
    x %= m;
    if (x < 0) x += m;
    return static_cast<int>(x);
}

} // namespace detail

/// A finite abelian group Z_{n_1} + ... + Z_{n_r} given by its
/// invariant factors: n_i >= 2 and n_i | n_{i+1}. The empty list is
/// the trivial group. Two groups with equal factor lists are
/// interchangeable everywhere.
///
/// Elements are handled both as coordinate vectors and, internally, as
/// mixed-radix indices in [0, order); the index order coincides with
/// lexicographic order on coordinates and is the canonical total order
/// used by every enumerator in the library.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}

    FiniteAbelianGroup(std::initializer_list<int> invariant_factors)
        : FiniteAbelianGroup(std::vector<int>(invariant_factors)) {}

    explicit FiniteAbelianGroup(std::vector<int> invariant_factors) {
        auto data = std::make_shared<detail::GroupData>();
        data->factors = std::move(invariant_factors);
        for (std::size_t i = 0; i < data->factors.size(); ++i) {
            int f = data->factors[i];
            if (f < 2)
                throw InputError("malformed presentation: invariant factor " +
                                 std::to_string(f) + " is smaller than 2");
            if (i + 1 < data->factors.size() && data->factors[i + 1] % f != 0)
                throw InputError("malformed presentation: " + std::to_string(f) +
                                 " does not divide " + std::to_string(data->factors[i + 1]));
            data->order *= f;
            if (data->order > 1'000'000)
                throw InputError("group order too large for enumeration");
        }
        data->exponent = data->factors.empty() ? 1 : data->factors.back();
        data->radix.assign(data->factors.size(), 1);
        for (int i = static_cast<int>(data->factors.size()) - 2; i >= 0; --i)
            data->radix[i] = data->radix[i + 1] * data->factors[i + 1];

        if (data->order <= 4096) {
            int n = static_cast<int>(data->order);
            data->add_table.resize(static_cast<std::size_t>(n) * n);
            data->neg_table.resize(n);
            data->order_table.resize(n);
            for (int i = 0; i < n; ++i) {
                data->neg_table[i] = neg_raw(*data, i);
                data->order_table[i] = order_raw(*data, i);
                for (int j = 0; j <= i; ++j) {
                    int s = add_raw(*data, i, j);
                    data->add_table[static_cast<std::size_t>(i) * n + j] = s;
                    data->add_table[static_cast<std::size_t>(j) * n + i] = s;
                }
            }
        }
        data_ = std::move(data);
    }

    int rank() const { return static_cast<int>(data_->factors.size()); }
    std::int64_t order() const { return data_->order; }
    int exponent() const { return data_->exponent; }
    const std::vector<int>& factors() const { return data_->factors; }
    bool is_trivial() const { return data_->factors.empty(); }
    bool is_cyclic() const { return rank() <= 1; }

    /// True when this is an elementary 2-group Z_2^r (possibly trivial).
    bool is_elementary_two_group() const {
        return std::all_of(factors().begin(), factors().end(),
                           [](int f) { return f == 2; });
    }

    bool operator==(const FiniteAbelianGroup& other) const {
        return data_ == other.data_ || data_->factors == other.data_->factors;
    }
    bool operator!=(const FiniteAbelianGroup& other) const { return !(*this == other); }

    std::string describe() const {
        if (is_trivial()) return "Z_1";
        std::string out;
        for (std::size_t i = 0; i < factors().size(); ++i) {
            if (i) out += "+";
            out += "Z_" + std::to_string(factors()[i]);
        }
        return out;
    }

    // --- index-space arithmetic ---------------------------------------

    int add_index(int a, int b) const {
        if (!data_->add_table.empty())
            return data_->add_table[static_cast<std::size_t>(a) * data_->order + b];
        return detail_add(a, b);
    }

    int neg_index(int a) const {
        if (!data_->neg_table.empty()) return data_->neg_table[a];
        return neg_raw(*data_, a);
    }

    int sub_index(int a, int b) const { return add_index(a, neg_index(b)); }

    int scalar_index(std::int64_t k, int a) const {
        std::vector<int> c = coords_of(a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::int64_t v = (k % data_->factors[i]) * c[i] % data_->factors[i];
            if (v < 0) v += data_->factors[i];
            c[i] = static_cast<int>(v);
        }
        return index_of_coords_unchecked(c);
    }

    int order_of_index(int a) const {
        if (!data_->order_table.empty()) return data_->order_table[a];
        return order_raw(*data_, a);
    }

    std::vector<int> coords_of(int index) const {
        std::vector<int> c(data_->factors.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = static_cast<int>((index / data_->radix[i]) % data_->factors[i]);
        }
        return c;
    }

    int index_of_coords(const std::vector<int>& coords) const {
        if (coords.size() != data_->factors.size())
            throw InputError("coordinate count does not match group rank");
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] < 0 || coords[i] >= data_->factors[i])
                throw InputError("coordinate " + std::to_string(coords[i]) +
                                 " out of range for Z_" + std::to_string(data_->factors[i]));
        return index_of_coords_unchecked(coords);
    }

    // --- element-level API ---------------------------------------------

    GroupElement zero() const;
    GroupElement element(std::vector<int> coords) const;
    GroupElement element_at(int index) const;
    GroupElement generator(int i) const; // i-th canonical generator e_i
    std::vector<GroupElement> elements() const;

    const std::shared_ptr<const detail::GroupData>& data() const { return data_; }

private:
    static int add_raw(const detail::GroupData& d, int a, int b) {
        int out = 0;
        for (std::size_t i = 0; i < d.factors.size(); ++i) {
            int ca = static_cast<int>((a / d.radix[i]) % d.factors[i]);
            int cb = static_cast<int>((b / d.radix[i]) % d.factors[i]);
            out += ((ca + cb) % d.factors[i]) * d.radix[i];
        }
        return out;
    }

    static int neg_raw(const detail::GroupData& d, int a) {
        int out = 0;
        for (std::size_t i = 0; i < d.factors.size(); ++i) {
            int ca = static_cast<int>((a / d.radix[i]) % d.factors[i]);
            out += ((d.factors[i] - ca) % d.factors[i]) * d.radix[i];
        }
        return out;
    }

    static int order_raw(const detail::GroupData& d, int a) {
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < d.factors.size(); ++i) {
            int ca = static_cast<int>((a / d.radix[i]) % d.factors[i]);
            int o = d.factors[i] / std::gcd(d.factors[i], ca);
            ord = std::lcm(ord, static_cast<std::int64_t>(o));
        }
        return static_cast<int>(ord);
    }

    int detail_add(int a, int b) const { return add_raw(*data_, a, b); }

    int index_of_coords_unchecked(const std::vector<int>& coords) const {
        int idx = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            idx += coords[i] * data_->radix[i];
        return idx;
    }

    std::shared_ptr<const detail::GroupData> data_;
};

/// One element of a FiniteAbelianGroup: a residue vector, stored as
/// the mixed-radix index into its group. Elements remember their group
/// and refuse arithmetic across different groups.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(FiniteAbelianGroup group, int index)
        : group_(std::move(group)), index_(index) {}

    const FiniteAbelianGroup& group() const { return group_; }
    int index() const { return index_; }
    std::vector<int> coords() const { return group_.coords_of(index_); }
    bool is_zero() const { return index_ == 0; }
    int order() const { return group_.order_of_index(index_); }

    GroupElement operator-() const { return {group_, group_.neg_index(index_)}; }

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
        require_same_group(a, b);
        return {a.group_, a.group_.add_index(a.index_, b.index_)};
    }
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b) {
        require_same_group(a, b);
        return {a.group_, a.group_.sub_index(a.index_, b.index_)};
    }
    friend GroupElement operator*(std::int64_t k, const GroupElement& a) {
        return {a.group_, a.group_.scalar_index(k, a.index_)};
    }

    /// Lexicographic on coordinates (equivalently, numeric on index).
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        require_same_group(a, b);
        return a.index_ < b.index_;
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.group_ == b.group_ && a.index_ == b.index_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

    std::string describe() const {
        auto c = coords();
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c[i]);
        }
        return out + ")";
    }

    static void require_same_group(const GroupElement& a, const GroupElement& b) {
        if (a.group_ != b.group_)
            throw InputError("elements of different groups cannot be combined");
    }

private:
    FiniteAbelianGroup group_;
    int index_ = 0;
};

inline GroupElement FiniteAbelianGroup::zero() const { return {*this, 0}; }

inline GroupElement FiniteAbelianGroup::element(std::vector<int> coords) const {
    return {*this, index_of_coords(coords)};
}

inline GroupElement FiniteAbelianGroup::element_at(int index) const {
    if (index < 0 || index >= order())
        throw InputError("element index out of range");
    return {*this, index};
}

inline GroupElement FiniteAbelianGroup::generator(int i) const {
    if (i < 0 || i >= rank()) throw InputError("generator index out of range");
    std::vector<int> c(rank(), 0);
    c[i] = 1;
    return element(std::move(c));
}

inline std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (int i = 0; i < order(); ++i) out.emplace_back(*this, i);
    return out;
}

/// Least k >= 1 with k*a = 0.
inline int element_order(const FiniteAbelianGroup& g, const GroupElement& a) {
    if (a.group() != g) throw InputError("element does not belong to the group");
    return g.order_of_index(a.index());
}

/// Index of a with respect to the generator g of a cyclic group of
/// order n: the unique s in [1, n] with s*g = a. In particular the
/// index of 0 is n, never 0.
inline int ind(const FiniteAbelianGroup& cyclic, const GroupElement& g,
               const GroupElement& a) {
    if (!cyclic.is_cyclic() || cyclic.order() < 2)
        throw InputError("ind is defined for cyclic groups of order >= 2 only");
    if (g.group() != cyclic || a.group() != cyclic)
        throw InputError("ind: element does not belong to the group");
    int n = static_cast<int>(cyclic.order());
    if (g.order() != n) throw InputError("ind: g is not a generator");
    int inv = detail::mod_inverse(g.index(), n);
    int s = static_cast<int>((static_cast<std::int64_t>(a.index()) * inv) % n);
    return s == 0 ? n : s;
}

// --- subgroups (extensional: sorted index sets) ------------------------

/// Sorted element-index view of a subgroup or subset.
using IndexSet = std::vector<int>;

inline bool is_subgroup(const FiniteAbelianGroup& g, const IndexSet& h) {
    if (h.empty() || h.front() != 0) return false;
    if (!std::is_sorted(h.begin(), h.end())) return false;
    if (std::adjacent_find(h.begin(), h.end()) != h.end()) return false;
    for (int a : h) {
        if (a < 0 || a >= g.order()) return false;
        if (!std::binary_search(h.begin(), h.end(), g.neg_index(a))) return false;
        for (int b : h)
            if (!std::binary_search(h.begin(), h.end(), g.add_index(a, b))) return false;
    }
    return true;
}

inline IndexSet subgroup_generated_idx(const FiniteAbelianGroup& g,
                                       const IndexSet& gens) {
    detail::Bitset seen(static_cast<int>(g.order()));
    std::vector<int> queue{0};
    seen.set(0);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int a : gens) {
            if (a < 0 || a >= g.order()) throw InputError("generator index out of range");
            int y = g.add_index(x, a);
            if (!seen.test(y)) { seen.set(y); queue.push_back(y); }
            int z = g.add_index(x, g.neg_index(a));
            if (!seen.test(z)) { seen.set(z); queue.push_back(z); }
        }
    }
    return seen.to_indices();
}

inline std::vector<GroupElement> subgroup_generated(const FiniteAbelianGroup& g,
                                                    const std::vector<GroupElement>& gens) {
    IndexSet gi;
    for (const auto& e : gens) {
        if (e.group() != g) throw InputError("generator from a different group");
        gi.push_back(e.index());
    }
    std::vector<GroupElement> out;
    for (int i : subgroup_generated_idx(g, gi)) out.push_back(g.element_at(i));
    return out;
}

struct CosetPartition {
    // parallel arrays: representative (least index) and sorted members
    std::vector<int> reps;
    std::vector<IndexSet> members;
    std::vector<int> coset_of; // element index -> position in reps
};

/// Partition of the group into cosets of the subgroup h; cosets are
/// ordered by their least element, which is the representative.
inline CosetPartition cosets(const FiniteAbelianGroup& g, const IndexSet& h) {
    if (!is_subgroup(g, h)) throw InputError("set is not a subgroup (not closed)");
    int n = static_cast<int>(g.order());
    CosetPartition part;
    part.coset_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (part.coset_of[x] != -1) continue;
        int id = static_cast<int>(part.reps.size());
        IndexSet mem;
        mem.reserve(h.size());
        for (int s : h) {
            int y = g.add_index(x, s);
            part.coset_of[y] = id;
            mem.push_back(y);
        }
        std::sort(mem.begin(), mem.end());
        part.reps.push_back(x);
        part.members.push_back(std::move(mem));
    }
    return part;
}

inline std::int64_t subgroup_index(const FiniteAbelianGroup& g, const IndexSet& h) {
    if (!is_subgroup(g, h)) throw InputError("set is not a subgroup (not closed)");
    return g.order() / static_cast<std::int64_t>(h.size());
}

} // namespace zerosum
