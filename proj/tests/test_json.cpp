#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zerosum/json_io.hpp"

using namespace zerosum;

TEST_CASE("fixed field layout") {
    FiniteAbelianGroup g({2, 4});
    CHECK(encode(g).dump() == R"({"factors":[2,4]})");
    CHECK(encode(g.element({1, 3})).dump() == "[1,3]");
    auto t = GSequence::from_indices(g, {1, 1, 5});
    CHECK(encode(t).dump() ==
          R"({"group":{"factors":[2,4]},"terms":[[[0,1],2],[[1,1],1]]})");
    auto r = InvariantResult(3, false, t);
    CHECK(encode(r)["value"] == 3);
    auto capped = InvariantResult(12, true, t);
    CHECK(encode(capped)["value"]["above_cap"] == 12);
}

TEST_CASE("round trips over random values") {
    std::mt19937 rng(8086);
    std::vector<std::vector<int>> shapes{{}, {2}, {6}, {2, 4}, {3, 3}, {2, 2, 2}};
    for (int round = 0; round < 200; ++round) {
        FiniteAbelianGroup g(shapes[rng() % shapes.size()]);
        std::vector<int> v(rng() % 6);
        for (auto& x : v) x = static_cast<int>(rng() % g.order());
        auto t = GSequence::from_indices(g, v);
        CHECK(decode_sequence(encode(t)) == t);
        CHECK(decode_group(encode(g)) == g);
        auto e = g.element_at(static_cast<int>(rng() % g.order()));
        CHECK(decode_element(encode(e), g) == e);
    }
}

TEST_CASE("round trips for homs, weight sets, omega sets, covers") {
    FiniteAbelianGroup z6({6}), z3({3});
    auto h = Homomorphism(z6, z3, {z3.element({1})});
    auto h2 = decode_hom(encode(h));
    CHECK(h2 == h);

    auto psi = WeightSet::plus_minus(z6);
    auto psi2 = decode_weightset(encode(psi));
    CHECK(psi2.homs() == psi.homs());

    auto omega = omega_all_minimal(FiniteAbelianGroup({4}));
    auto omega2 = decode_omegaset(encode(omega));
    CHECK(omega2.same_members(omega));
    CHECK(omega2.provenance() == "all_minimal");

    auto r = davenport(z6);
    auto r2 = decode_invariant(encode(r));
    CHECK(r2.value == r.value);
    CHECK(r2.witness == r.witness);

    CoverSystem cover(z6, {Coset(z6, 0, subgroup_generated_idx(z6, {2})),
                           Coset(z6, 1, subgroup_generated_idx(z6, {2}))});
    auto cover2 = decode_cover(encode(cover));
    REQUIRE(cover2.size() == cover.size());
    for (int i = 0; i < cover.size(); ++i) CHECK(cover2.cosets[i] == cover.cosets[i]);
}

TEST_CASE("decoding rejects malformed payloads") {
    CHECK_THROWS_AS(decode_group(json::parse(R"({"factors":[4,2]})")), InputError);
    CHECK_THROWS_AS(decode_group(json::parse(R"({"f":[2]})")), InputError);
    CHECK_THROWS_AS(decode_sequence(json::parse(
                        R"({"group":{"factors":[4]},"terms":[[[1],0]]})")),
                    InputError);
    CHECK_THROWS_AS(decode_sequence(json::parse(
                        R"({"group":{"factors":[4]},"terms":[[[7],1]]})")),
                    InputError);
    CHECK_THROWS_AS(decode_hom(json::parse(
                        R"({"domain":{"factors":[2]},"codomain":{"factors":[4]},"images":[[1]]})")),
                    InputError);
    CHECK_THROWS_AS(decode_omegaset(json::parse(
                        R"({"group":{"factors":[4]},"members":[{"group":{"factors":[2]},"terms":[]}]})")),
                    InputError);
}

TEST_CASE("encoding is deterministic") {
    FiniteAbelianGroup g({2, 4});
    auto omega = omega_all_minimal(g);
    CHECK(encode(omega).dump() == encode(omega).dump());
    auto again = omega_all_minimal(g);
    CHECK(encode(again).dump() == encode(omega).dump());
}
