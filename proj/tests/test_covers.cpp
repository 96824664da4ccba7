#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "zerosum/covers.hpp"

using namespace zerosum;

namespace {

GSequence seq(const FiniteAbelianGroup& g, std::vector<int> idx) {
    return GSequence::from_indices(g, std::move(idx));
}

Coset coset_of(const FiniteAbelianGroup& g, int rep, std::vector<int> gens) {
    return Coset(g, rep, subgroup_generated_idx(g, gens));
}

} // namespace

TEST_CASE("coset construction and membership") {
    FiniteAbelianGroup z6({6});
    auto c = coset_of(z6, 1, {2});
    CHECK(c.members() == IndexSet{1, 3, 5});
    CHECK(c.representative_index() == 1);
    CHECK(c.contains_index(3));
    CHECK(!c.contains_index(2));
    CHECK(c.index_in_group() == 2);
    CHECK(coset_of(z6, 3, {2}) == c); // same member set, canonical rep
    CHECK_THROWS_AS(Coset(z6, 0, IndexSet{0, 2}), InputError);
}

TEST_CASE("cover detection") {
    FiniteAbelianGroup z6({6}), z4({4});
    CoverSystem two(z6, {coset_of(z6, 0, {2}), coset_of(z6, 1, {2})});
    CHECK(is_cover(two));
    CoverSystem half(z6, {coset_of(z6, 0, {2})});
    CHECK(!is_cover(half));
    CoverSystem whole(z4, {coset_of(z4, 0, {1})});
    CHECK(is_cover(whole));
}

TEST_CASE("greedy irredundant reduction") {
    FiniteAbelianGroup z6({6});
    CoverSystem s(z6, {coset_of(z6, 0, {2}), coset_of(z6, 1, {2}), coset_of(z6, 0, {3})});
    auto r = irredundant_reduce(s);
    REQUIRE(r.size() == 2);
    CHECK(r.cosets[0] == s.cosets[0]);
    CHECK(r.cosets[1] == s.cosets[1]);
    CHECK(is_irredundant_cover(r));

    auto again = irredundant_reduce(r);
    CHECK(again.size() == 2); // already irredundant

    CoverSystem mixed(z6, {coset_of(z6, 0, {1}), coset_of(z6, 2, {3})});
    auto m = irredundant_reduce(mixed);
    CHECK(m.size() == 1);
    CHECK(m.cosets[0].index_in_group() == 1);

    CHECK_THROWS_AS(irredundant_reduce(CoverSystem(z6, {coset_of(z6, 0, {2})})),
                    InputError);
}

TEST_CASE("index bound on irredundant covers") {
    FiniteAbelianGroup z2({2}), z4({4});
    CoverSystem singles(z2, {coset_of(z2, 0, {}), coset_of(z2, 1, {})});
    auto r = sun_index_bound_verify(singles);
    CHECK(r.k == 2);
    CHECK(r.max_index == 2);
    CHECK(r.holds);

    CoverSystem halves(z4, {coset_of(z4, 0, {2}), coset_of(z4, 1, {2})});
    auto r2 = sun_index_bound_verify(halves);
    CHECK(r2.max_index == 2);
    CHECK(r2.holds);

    CoverSystem red(z4, {coset_of(z4, 0, {1}), coset_of(z4, 1, {2})});
    CHECK_THROWS_AS(sun_index_bound_verify(red), InputError); // redundant
}

TEST_CASE("index bound on randomized irredundant covers") {
    std::mt19937 rng(1618);
    std::vector<std::vector<int>> shapes{{2},    {3},    {4},    {2, 2}, {6},
                                         {8},    {2, 4}, {2, 2, 2}, {9},  {3, 3},
                                         {12},   {2, 6}, {16},   {4, 4}, {2, 8},
                                         {2, 2, 4}, {2, 2, 2, 2}};
    for (int round = 0; round < 150; ++round) {
        FiniteAbelianGroup g(shapes[rng() % shapes.size()]);
        std::vector<Coset> cs;
        detail::Bitset covered(static_cast<int>(g.order()));
        while (covered.count() < g.order()) {
            std::vector<int> gens;
            for (int k = static_cast<int>(rng() % 2); k >= 0; --k)
                gens.push_back(static_cast<int>(rng() % g.order()));
            int rep = static_cast<int>(rng() % g.order());
            cs.emplace_back(g, rep, subgroup_generated_idx(g, gens));
            for (int x : cs.back().members()) covered.set(x);
        }
        auto irr = irredundant_reduce(CoverSystem(g, std::move(cs)));
        auto rep = sun_index_bound_verify(irr);
        CHECK(rep.holds);
    }
}

TEST_CASE("kernel cover from an extremal free sequence") {
    FiniteAbelianGroup z5({5}), z4({4});
    auto pm = WeightSet::plus_minus(z5);
    auto cover = kernels_to_cover(z5, z5, pm, seq(z5, {1, 2}));
    CHECK(is_cover(cover));
    for (const auto& c : cover.cosets) CHECK(c.subgroup_order() == 1);

    auto idw = WeightSet::identity(z4);
    auto cover2 = kernels_to_cover(z4, z4, idw, seq(z4, {1, 1, 1}));
    CHECK(is_cover(cover2));
    CHECK(cover2.size() == 4); // singleton cosets over the whole group

    CHECK_THROWS_AS(kernels_to_cover(z5, z5, pm, seq(z5, {1, 1})), InputError);
    CHECK_THROWS_AS(kernels_to_cover(z5, z5, pm, seq(z5, {1})), InputError);
}

TEST_CASE("index filter is the identity at finite thresholds") {
    FiniteAbelianGroup z6({6});
    CoverSystem s(z6, {coset_of(z6, 0, {2}), coset_of(z6, 1, {2}), coset_of(z6, 0, {3})});
    auto kept = coset_index_filter(s, z6.order());
    CHECK(kept.size() == s.size());
    auto trimmed = coset_index_filter(s, 2);
    CHECK(trimmed.size() == 2);
}

TEST_CASE("largest irredundant cover from given kernels") {
    FiniteAbelianGroup z2({2}), z4({4});
    auto r1 = max_irredundant_size(z2, {IndexSet{0}});
    CHECK(r1.exact);
    CHECK(r1.max_size == 2);

    auto r2 = max_irredundant_size(z4, {subgroup_generated_idx(z4, {2})});
    CHECK(r2.exact);
    CHECK(r2.max_size == 2);

    auto r3 = max_irredundant_size(z4, {IndexSet{0}, subgroup_generated_idx(z4, {2})});
    CHECK(r3.exact);
    // four singletons cover with private points; five cosets cannot all
    // keep a private point among four elements
    CHECK(r3.max_size == 4);
}

TEST_CASE("cover-size bound on the weighted Davenport constant") {
    FiniteAbelianGroup z4({4}), z5({5}), z2({2});
    auto r1 = cover_size_bound_check(z4, z4, WeightSet::identity(z4));
    CHECK(r1.m.max_size == 4);
    CHECK(r1.bound == 8);
    CHECK(r1.dpsi.value == 4);
    CHECK(r1.verdict == CoverSizeBoundReport::Verdict::holds);

    auto r2 = cover_size_bound_check(z5, z5, WeightSet::plus_minus(z5));
    CHECK(r2.dpsi.value == 3);
    CHECK(r2.verdict == CoverSizeBoundReport::Verdict::holds);

    auto r3 = cover_size_bound_check(z2, z2, WeightSet::identity(z2));
    CHECK(r3.m.max_size == 2);
    CHECK(r3.bound == 2);
    CHECK(r3.dpsi.value == 2);
    CHECK(r3.verdict == CoverSizeBoundReport::Verdict::holds);
}

TEST_CASE("quotient weights roundtrip") {
    FiniteAbelianGroup z6({6}), z4({4}), v4({2, 2});

    auto r = quotient_weights_roundtrip(
        z6, {subgroup_generated_idx(z6, {2}), subgroup_generated_idx(z6, {3})});
    CHECK(r.codomain.factors() == std::vector<int>{6});
    CHECK(r.kernels_match);
    CHECK(!r.dpsi.above_cap);
    CHECK(r.cover_exists);

    auto r2 = quotient_weights_roundtrip(z4, {IndexSet{0}});
    CHECK(r2.codomain.factors() == std::vector<int>{4});
    CHECK(r2.kernels_match);
    CHECK(r2.dpsi.value == 4);

    auto e1 = subgroup_generated_idx(v4, {v4.element({1, 0}).index()});
    auto e2 = subgroup_generated_idx(v4, {v4.element({0, 1}).index()});
    auto r3 = quotient_weights_roundtrip(v4, {e1, e2});
    CHECK(r3.kernels_match);
    CHECK(!r3.dpsi.above_cap);
    CHECK(r3.dpsi.value == 2);
}

TEST_CASE("cap-limited cover search reports an inexact lower bound") {
    FiniteAbelianGroup z4({4});
    SearchLimits tiny;
    tiny.node_cap = 3;
    auto r = max_irredundant_size(z4, {IndexSet{0}}, tiny);
    CHECK(!r.exact);
    CHECK(r.max_size <= 4);
    auto full = max_irredundant_size(z4, {IndexSet{0}});
    CHECK(full.exact);
    CHECK(full.max_size == 4);
    CHECK(r.max_size <= full.max_size);
}
