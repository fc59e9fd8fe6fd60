#include <doctest.h>

#include <filesystem>

#include "ncover/error.hpp"
#include "ncover/permgroup.hpp"

using namespace ncover;

TEST_CASE("cycle notation") {
    auto p = parse_cycles("(1,2,3)(4,5)", 6);
    CHECK(cycle_type(p).to_string() == "3,2,1");
    CHECK_FALSE(is_even_perm(p));
    CHECK(p[0] == 1);
    CHECK(p[2] == 0);
    CHECK(cycle_type(parse_cycles("", 4)).to_string() == "1,1,1,1");
    CHECK_THROWS_AS(parse_cycles("(1,2,2)", 4), InputError);
    CHECK_THROWS_AS(parse_cycles("(1,5)", 4), InputError);
    CHECK_THROWS_AS(parse_cycles("1,2", 4), InputError);
    auto q = compose(parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3));
    CHECK(q == parse_cycles("(1,3,2)", 3));
}

TEST_CASE("closure") {
    auto s4 = closure({parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)}, 100);
    CHECK(s4.size() == 24);
    auto a5 = closure({parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)}, 100);
    CHECK(a5.size() == 60);
    CHECK_THROWS_AS(closure({parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)}, 100), InputError);
}

TEST_CASE("split halves") {
    // the 24 five-cycles of A_5 fall into two classes of 12
    auto a5 = closure({parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)}, 100);
    int half[2] = {0, 0};
    for (const auto& e : a5)
        if (cycle_type(e).k() == 1)
            ++half[split_half(e)];
    CHECK(half[0] == 12);
    CHECK(half[1] == 12);
    // even conjugation keeps the half, odd conjugation swaps it
    auto sigma = parse_cycles("(1,3,5,2,4)", 5);
    auto inverse = [](const Perm& g) {
        Perm inv(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            inv[g[i]] = static_cast<std::uint8_t>(i);
        return inv;
    };
    for (const auto& g : closure({parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)}, 200)) {
        auto conj = compose(compose(inverse(g), sigma), g);
        REQUIRE((split_half(conj) == split_half(sigma)) == is_even_perm(g));
    }
    CHECK_THROWS_AS(split_half(parse_cycles("(1,2)(3,4)", 5)), InputError);
    CHECK_THROWS_AS(split_half(parse_cycles("(1,2,3)", 5)), InputError); // [3,1,1]
}

TEST_CASE("shipped M12 data matches a fresh enumeration") {
    auto gen = generate_m12();
    CHECK(gen.order == 95040);
    CHECK(gen.one_half_only.empty());
    REQUIRE(gen.data.classes.size() == 1);
    CHECK(gen.data.classes[0].covered.size() == 14);
    auto shipped = load_primitive_data(std::filesystem::path(NCOVER_DATA_DIR) / "primitive" / "m12_A12.json");
    CHECK(to_json(shipped) == to_json(gen.data));
}
