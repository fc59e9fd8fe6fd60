#include <doctest.h>

#include <numeric>

#include "ncover/arith.hpp"
#include "ncover/error.hpp"
#include "ncover/membership.hpp"
#include "oracles.hpp"

using namespace ncover;

namespace {

CycleType T(std::vector<int> parts) { return CycleType::from_parts(std::move(parts)); }

std::vector<int> blocks_of(int n) {
    std::vector<int> out;
    for (int b = 2; 2 * b <= n; ++b)
        if (n % b == 0)
            out.push_back(b);
    return out;
}

} // namespace

TEST_CASE("intransitive examples") {
    const auto Z = T({235, 17, 3});
    CHECK(in_intransitive(Z, 20));
    CHECK(in_intransitive(Z, 3));
    CHECK(in_intransitive(Z, 17));
    CHECK_FALSE(in_intransitive(Z, 14));
    for (int n = 5; n <= 30; ++n) {
        for (int x = 1; 2 * x < n; ++x) {
            CHECK_FALSE(in_intransitive(T({n}), x));
            for (int y = 1; 2 * y < n; ++y)
                REQUIRE(in_intransitive(T({n - x, x}), y) == (x == y));
        }
    }
    CHECK_THROWS_AS(in_intransitive(T({6, 6}), 6), InputError);
    CHECK_THROWS_AS(in_intransitive(T({6, 6}), 0), InputError);
}

TEST_CASE("intransitive against subset brute force and complement") {
    for (int n = 2; n <= 24; ++n) {
        const auto idx = enumerate_types(n);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const auto t = idx.type(i);
            for (int x = 1; 2 * x < n; ++x) {
                const bool got = in_intransitive(t, x);
                REQUIRE(got == oracle::subset_sums_to(t.parts(), x));
                REQUIRE(got == oracle::subset_sums_to(t.parts(), n - x));
            }
        }
    }
}

TEST_CASE("imprimitive against the block-system oracle, n <= 8") {
    for (int n = 4; n <= 8; ++n) {
        const auto idx = enumerate_types(n);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const auto t = idx.type(i);
            const auto rep = oracle::representative(t.parts());
            for (int b : blocks_of(n)) {
                const bool expect = oracle::preserves_some_block_system(rep, b);
                REQUIRE_MESSAGE(in_imprimitive(t, b) == expect, t.to_string() << " b=" << b);
                auto w = imprimitive_witness(t, b);
                REQUIRE(w.has_value() == expect);
                if (w)
                    REQUIRE(w->certifies(t.parts()));
            }
        }
    }
}

TEST_CASE("imprimitive examples") {
    CHECK(in_imprimitive(T({2, 2, 2}), 3));
    CHECK(in_imprimitive(T({2, 10}), 2));
    for (int b : {2, 3, 4, 6})
        CHECK_FALSE(in_imprimitive(T({7, 5}), b));
    for (int n : {12, 30, 105})
        for (int b : blocks_of(n))
            CHECK(in_imprimitive(T({n}), b));
    for (int b : blocks_of(105)) {
        CHECK_FALSE(in_imprimitive(T({95, 7, 3}), b));
        CHECK_FALSE(in_imprimitive(T({67, 28, 10}), b));
        CHECK_FALSE(in_imprimitive(T({75, 23, 5, 2}), b));
    }
    for (int b : blocks_of(165))
        CHECK_FALSE(in_imprimitive(T({84, 59, 18, 4}), b));
    CHECK_THROWS_AS(in_imprimitive(T({6, 6}), 5), InputError);
    CHECK_THROWS_AS(in_imprimitive(T({6, 6}), 12), InputError);
    CHECK_THROWS_AS(in_imprimitive(T({6, 6}), 1), InputError);
}

TEST_CASE("witness structure") {
    auto w = imprimitive_witness(T({2, 10}), 2);
    REQUIRE(w);
    CHECK(w->block_size == 2);
    CHECK(w->block_count == 6);
    int m = 0;
    for (const auto& g : w->groups) {
        m += g.block_orbit;
        auto d = g.intersections();
        CHECK(std::accumulate(d.begin(), d.end(), 0) == 2);
    }
    CHECK(m == 6);
    CHECK_FALSE(w->to_string().empty());
    // a grouping for another type does not certify this one
    CHECK_FALSE(w->certifies(std::vector<int>{7, 5}));
}

TEST_CASE("many equal parts stay fast") {
    CHECK(in_imprimitive(T(std::vector<int>(60, 2)), 2));
    CHECK(in_imprimitive(T(std::vector<int>(120, 1)), 60));
    std::vector<int> mixed(40, 3);
    mixed.insert(mixed.end(), 30, 2);
    mixed.insert(mixed.end(), 10, 1);
    const auto t = T(mixed);
    for (int b : blocks_of(t.n()))
        (void)in_imprimitive(t, b);
}

TEST_CASE("closed-form patterns agree with the search, n in {60, 105}") {
    for (int n : {60, 105}) {
        std::size_t checked = 0;
        for (int k = 2; k <= 4; ++k)
            for (const auto& parts : oracle::partitions_at_most(n, k)) {
                if (static_cast<int>(parts.size()) != k)
                    continue;
                int g = 0;
                for (int p : parts)
                    g = std::gcd(g, p);
                if (g != 1)
                    continue;
                for (int b : blocks_of(n)) {
                    auto pat = pattern_membership(parts, b);
                    REQUIRE(pat.has_value());
                    REQUIRE_MESSAGE(*pat == in_imprimitive(parts, b), T(parts).to_string() << " b=" << b);
                    ++checked;
                }
            }
        CHECK(checked > 1000);
    }
    CHECK_FALSE(pattern_membership(std::vector<int>{6, 6}, 2).has_value());
    CHECK_FALSE(pattern_membership(std::vector<int>{5, 3, 2, 1, 1}, 2).has_value());
}

TEST_CASE("two-part coprime exclusion") {
    for (int n = 5; n <= 60; ++n)
        for (const auto& t : two_part_types(n)) {
            if (!coprime_two_part_exclusion(t))
                continue;
            for (int b : blocks_of(n))
                REQUIRE_FALSE(in_imprimitive(t, b));
        }
    CHECK(coprime_two_part_exclusion(T({11, 1})));
    CHECK(coprime_two_part_exclusion(T({7, 5})));
    CHECK_FALSE(coprime_two_part_exclusion(T({10, 2})));
    CHECK_THROWS_AS(coprime_two_part_exclusion(T({5, 5, 2})), InputError);
}

TEST_CASE("alternating membership") {
    CHECK_FALSE(in_alternating(T({6})));
    CHECK(in_alternating(T({11, 1})));
    CHECK(in_alternating(T({10, 2})));
}
