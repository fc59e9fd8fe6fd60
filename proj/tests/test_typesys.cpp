#include <doctest.h>

#include "ncover/error.hpp"
#include "ncover/typesys.hpp"
#include "oracles.hpp"

using namespace ncover;

TEST_CASE("type counts match the pentagonal recurrence") {
    const auto p = oracle::partition_counts(70);
    CHECK(enumerate_types(6).size() == 11);
    CHECK(enumerate_types(12).size() == 77);
    for (int n = 1; n <= 50; ++n)
        REQUIRE(enumerate_types(n).size() == static_cast<std::size_t>(p[static_cast<std::size_t>(n)]));
}

TEST_CASE("p(70) at the default cap") {
    const auto p = oracle::partition_counts(70);
    CHECK(enumerate_types(70).size() == static_cast<std::size_t>(p[70]));
    CHECK_THROWS_AS(enumerate_types(71), InputError);
    CHECK(enumerate_types(71, TypeFilter::All, 71).size() > 0);
    CHECK_THROWS_AS(enumerate_types(256, TypeFilter::All, 300), InputError);
    CHECK_THROWS_AS(enumerate_types(0), InputError);
}

TEST_CASE("even types") {
    const auto p = oracle::partition_counts(40);
    for (int n = 1; n <= 40; ++n) {
        const auto even = static_cast<std::int64_t>(enumerate_types(n, TypeFilter::Even).size());
        REQUIRE(2 * even - p[static_cast<std::size_t>(n)] == oracle::distinct_odd_partitions(n));
    }
    auto four = enumerate_types(4, TypeFilter::Even);
    REQUIRE(four.size() == 3);
    CHECK(four.type(0) == CycleType::from_parts({3, 1}));
    CHECK(four.type(1) == CycleType::from_parts({2, 2}));
    CHECK(four.type(2) == CycleType::from_parts({1, 1, 1, 1}));
    CHECK(enumerate_types(12, TypeFilter::Even).size() == 40);
}

TEST_CASE("order, canonical form and lookup") {
    const auto idx = enumerate_types(15);
    CHECK(idx.type(0) == CycleType::from_parts({15}));
    CHECK(idx.type(idx.size() - 1) == CycleType::from_parts(std::vector<int>(15, 1)));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto t = idx.type(i);
        REQUIRE(t.n() == 15);
        REQUIRE(std::is_sorted(t.parts().rbegin(), t.parts().rend()));
        if (i > 0)
            REQUIRE(idx.type(i - 1).parts() > t.parts());
        REQUIRE(idx.find(t) == i);
    }
    CHECK_FALSE(idx.find(CycleType::from_parts({14})).has_value());
    CHECK(enumerate_types(1).size() == 1);
}

TEST_CASE("parity") {
    CHECK_FALSE(is_even(CycleType::from_parts({6})));
    CHECK(is_even(CycleType::from_parts({1, 11})));
    CHECK(is_even(CycleType::from_parts({2, 10})));
}

TEST_CASE("parse and render") {
    auto t = CycleType::parse("3,17,235");
    CHECK(t.to_string() == "235,17,3");
    CHECK(t.n() == 255);
    CHECK(t.k() == 3);
    CHECK(CycleType::parse(" 2, 1 ,1", 4).to_string() == "2,1,1");
    CHECK_THROWS_AS(CycleType::parse("3,2", 6), InputError);
    CHECK_THROWS_AS(CycleType::parse("3,x"), InputError);
    CHECK_THROWS_AS(CycleType::parse(""), InputError);
    CHECK_THROWS_AS(CycleType::from_parts({3, 0}), InputError);
}

TEST_CASE("two-part types") {
    CHECK(two_part_types(12).size() == 5);
    CHECK(two_part_types(12).front() == CycleType::from_parts({11, 1}));
    CHECK(two_part_types(7).size() == 3);
    CHECK(two_part_types(255).size() == 127);
    const auto idx = enumerate_types(20);
    for (const auto& t : two_part_types(20)) {
        CHECK(idx.find(t).has_value());
        CHECK(t.parts()[1] != 10);
    }
}
