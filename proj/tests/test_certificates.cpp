#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zerosum/certificates.hpp"

using namespace zerosum;

namespace {

GSequence seq(const FiniteAbelianGroup& g, std::vector<int> idx) {
    return GSequence::from_indices(g, std::move(idx));
}

bool is_sub_multiset(IntSequence small, IntSequence big) {
    for (int h : small) {
        auto it = std::find(big.begin(), big.end(), h);
        if (it == big.end()) return false;
        big.erase(it);
    }
    return true;
}

// existence oracle: some pair of equal-sum subsets with distinct sizes
bool distinct_length_pair_exists(const IntSequence& t, int x) {
    std::vector<int> sizes;
    for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
        int s = 0, len = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (mask & (1u << i)) { s += t[i]; ++len; }
        if (s == x) sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return !sizes.empty() && sizes.front() != sizes.back();
}

} // namespace

TEST_CASE("equal-sum pair with distinct lengths: worked instances") {
    auto [v1, v2] = equal_sum_distinct_lengths({1, 1, 1, 2}, 3, 2);
    CHECK(std::accumulate(v1.begin(), v1.end(), 0) == 2);
    CHECK(std::accumulate(v2.begin(), v2.end(), 0) == 2);
    CHECK(v1.size() != v2.size());

    auto [w1, w2] = equal_sum_distinct_lengths({1, 1, 1, 1, 1, 2, 2}, 5, 4);
    CHECK(std::accumulate(w1.begin(), w1.end(), 0) == 4);
    CHECK(std::accumulate(w2.begin(), w2.end(), 0) == 4);
    CHECK(w1.size() != w2.size());
    CHECK(is_sub_multiset(w1, {1, 1, 1, 1, 1, 2, 2}));
    CHECK(is_sub_multiset(w2, {1, 1, 1, 1, 1, 2, 2}));

    CHECK_THROWS_AS(equal_sum_distinct_lengths({1, 1, 3}, 2, 3), InputError); // sum too big
    CHECK_THROWS_AS(equal_sum_distinct_lengths({1, 1, 1, 2}, 0, 2), InputError); // marked term is 1
    CHECK_THROWS_AS(equal_sum_distinct_lengths({1, 1, 1, 2}, 3, 4), InputError); // x out of range
}

TEST_CASE("equal-sum pair: randomized validation against the oracle") {
    std::mt19937 rng(424242);
    int done = 0;
    while (done < 10000) {
        int ell = 3 + static_cast<int>(rng() % 10);
        IntSequence t(ell, 1);
        int budget = ell - 3; // keeps the sum at most 2*ell - 3
        while (budget > 0) {
            int spend = 1 + static_cast<int>(rng() % budget);
            t[rng() % ell] += spend;
            budget -= spend;
        }
        int marked = -1;
        for (int i = 0; i < ell; ++i)
            if (t[i] > 1) marked = i;
        if (marked < 0) continue;
        int total = std::accumulate(t.begin(), t.end(), 0);
        int lo = t[marked], hi = total - t[marked];
        if (lo > hi) continue;
        int x = lo + static_cast<int>(rng() % (hi - lo + 1));

        auto [v1, v2] = equal_sum_distinct_lengths(t, marked, x);
        REQUIRE(std::accumulate(v1.begin(), v1.end(), 0) == x);
        REQUIRE(std::accumulate(v2.begin(), v2.end(), 0) == x);
        REQUIRE(v1.size() != v2.size());
        REQUIRE(is_sub_multiset(v1, t));
        REQUIRE(is_sub_multiset(v2, t));
        REQUIRE(distinct_length_pair_exists(t, x));
        ++done;
    }
}

TEST_CASE("bounded non-unit term") {
    CHECK(find_bounded_nonunit_term({1, 1, 2}) == 2);
    CHECK(find_bounded_nonunit_term({1, 2, 3}) == 1);
    CHECK_THROWS_AS(find_bounded_nonunit_term({1, 1, 1}), InputError); // sum equals ones
    CHECK_THROWS_AS(find_bounded_nonunit_term({1, 3}), InputError);    // 2 is unreachable
}

TEST_CASE("bounded non-unit term: randomized") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 10000) {
        IntSequence t(1 + rng() % 8);
        for (auto& h : t) h = 1 + static_cast<int>(rng() % 5);
        int total = std::accumulate(t.begin(), t.end(), 0);
        int ones = static_cast<int>(std::count(t.begin(), t.end(), 1));
        if (total <= ones) continue;
        bool full = true;
        {
            std::vector<bool> reach(total + 1, false);
            for (int h : t) {
                for (int s = total - h; s >= 1; --s)
                    if (reach[s]) reach[s + h] = true;
                reach[h] = true;
            }
            for (int s = 1; s <= total; ++s)
                if (!reach[s]) { full = false; break; }
        }
        if (!full) {
            CHECK_THROWS_AS(find_bounded_nonunit_term(t), InputError);
        } else {
            int i = find_bounded_nonunit_term(t);
            REQUIRE(t[i] > 1);
            REQUIRE(t[i] <= ones + 1);
        }
        ++done;
    }
}

TEST_CASE("generator certificate for long zero-sum free sequences") {
    FiniteAbelianGroup z7({7}), z6({6});
    auto g7 = savchev_chen_generator(seq(z7, {1, 1, 1, 1}));
    REQUIRE(g7.has_value());
    CHECK(g7->index() == 1);
    auto g6 = savchev_chen_generator(seq(z6, {1, 1, 1, 2}));
    REQUIRE(g6.has_value());
    CHECK(g6->index() == 1);
    CHECK_THROWS_AS(savchev_chen_generator(seq(z6, {2, 4})), InputError);  // too short + not free
    CHECK_THROWS_AS(savchev_chen_generator(seq(z6, {1, 1})), InputError);  // length <= n/2
}

TEST_CASE("generator certificate: exhaustive sweep") {
    for (int n = 3; n <= 9; ++n) {
        FiniteAbelianGroup g({n});
        oracles::for_each_multiset(g, n - 1, [&](const GSequence& t) {
            if (2 * t.length() <= n) return;
            if (!is_zero_sum_free(t)) return;
            auto gen = savchev_chen_generator(t);
            REQUIRE(gen.has_value());
            // re-verify the three clauses independently
            long long total = 0;
            int vg = t.count(*gen);
            for (auto [i, m] : t.terms()) {
                int s = ind(g, *gen, g.element_at(i));
                total += static_cast<long long>(m) * s;
                CHECK(vg >= s);
            }
            CHECK(total < n);
            std::set<int> expect;
            for (int i = 1; i <= total; ++i)
                expect.insert((i * gen->index()) % n);
            std::set<int> got;
            for (const auto& e : subsum_set(t)) got.insert(e.index());
            CHECK(got == expect);
        });
    }
}

TEST_CASE("distinct-length zero-sum pairs") {
    FiniteAbelianGroup z4({4}), z5({5});
    auto p = graham_pair(seq(z4, {0, 1, 3, 2}));
    REQUIRE(p.has_value());
    CHECK(p->first.length() != p->second.length());
    CHECK(p->first.sigma().index() == 0);
    CHECK(p->second.sigma().index() == 0);

    auto q = graham_pair(seq(z5, {1, 2, 3, 4, 1}));
    REQUIRE(q.has_value());
    CHECK(q->first.length() != q->second.length());

    CHECK_THROWS_AS(graham_pair(seq(z5, {1, 1, 1, 1, 1})), InputError); // support too small
    CHECK_THROWS_AS(graham_pair(seq(z5, {1, 2, 3})), InputError);       // too short
}

TEST_CASE("distinct-length zero-sum pairs: exhaustive sweep") {
    for (int n = 3; n <= 6; ++n) {
        FiniteAbelianGroup g({n});
        for (int len : {n, n + 1}) {
            oracles::for_each_multiset(g, len, [&](const GSequence& t) {
                if (t.length() != len || t.support_size() < 3) return;
                auto p = graham_pair(t);
                REQUIRE(p.has_value());
                CHECK(t.contains(p->first));
                CHECK(t.contains(p->second));
                CHECK(p->first.length() < p->second.length());
            });
        }
    }
}

TEST_CASE("squarefree independent support over Z_2^r") {
    FiniteAbelianGroup c2_3({2, 2, 2});
    auto e1 = c2_3.element({1, 0, 0}).index();
    auto e2 = c2_3.element({0, 1, 0}).index();
    auto e3 = c2_3.element({0, 0, 1}).index();
    auto e12 = c2_3.element({1, 1, 0}).index();

    auto basis = elementary2_zero_sum_free_cert(seq(c2_3, {e1, e2, e3}));
    CHECK(basis.zero_sum_free);
    auto square = elementary2_zero_sum_free_cert(seq(c2_3, {e1, e1}));
    CHECK(!square.squarefree);
    CHECK(!square.zero_sum_free);
    auto dependent = elementary2_zero_sum_free_cert(seq(c2_3, {e1, e2, e12}));
    CHECK(!dependent.independent);
    CHECK(!dependent.zero_sum_free);

    CHECK_THROWS_AS(elementary2_zero_sum_free_cert(seq(FiniteAbelianGroup({4}), {1})),
                    InputError);
}

TEST_CASE("structural certificate equals subset-sum freeness exhaustively") {
    for (int r = 1; r <= 4; ++r) {
        FiniteAbelianGroup g(std::vector<int>(r, 2));
        int len_cap = r >= 4 ? 5 : 6;
        oracles::for_each_multiset(g, len_cap, [&](const GSequence& s) {
            auto cert = elementary2_zero_sum_free_cert(s);
            CHECK(cert.zero_sum_free == oracles::is_zero_sum_free(s));
        });
    }
}
