#include <doctest.h>

#include <filesystem>

#include "ncover/error.hpp"
#include "ncover/solver.hpp"
#include "oracles.hpp"

using namespace ncover;

namespace {

std::vector<std::string> labels(const std::vector<SubgroupClass>& v) {
    std::vector<std::string> out;
    for (const auto& c : v)
        out.push_back(c.label());
    return out;
}

UniverseOptions with_m12() {
    UniverseOptions o;
    o.primitive = load_primitive_dir(std::filesystem::path(NCOVER_DATA_DIR) / "primitive", 12, Flavor::A);
    return o;
}

auto exhaustive(const MembershipMatrix& mm) {
    REQUIRE(mm.class_count() <= 16);
    return oracle::exhaustive_cover(mm);
}

} // namespace

TEST_CASE("standard cover") {
    CHECK(labels(build_standard_cover(12, Flavor::S)) == std::vector<std::string>{"P:1", "P:5", "W:2x6", "W:3x4"});
    CHECK(labels(build_standard_cover(30, Flavor::S)) ==
          std::vector<std::string>{"P:1", "P:5", "P:7", "P:11", "P:13", "W:2x15", "W:3x10"});
    CHECK(build_standard_cover(66, Flavor::A).size() == 13);
    CHECK_THROWS_AS(build_standard_cover(27, Flavor::S), DomainError);
    for (int n = 6; n <= 40; ++n) {
        if (factorize(n).r() < 2)
            continue;
        for (Flavor f : {Flavor::S, Flavor::A}) {
            auto mm = build_instance(n, f);
            auto cover = build_standard_cover(n, f);
            REQUIRE(static_cast<Int>(cover.size()) == g_value(n));
            REQUIRE(verify_cover(mm, cover).empty());
        }
    }
}

TEST_CASE("verify_cover") {
    auto s12 = build_instance(12, Flavor::S);
    std::vector<SubgroupClass> p1{SubgroupClass(Intransitive{1})};
    auto missing = verify_cover(s12, p1);
    REQUIRE_FALSE(missing.empty());
    CHECK(s12.types().label(missing.front()) == "12");
    auto a6 = build_instance(6, Flavor::A);
    std::vector<SubgroupClass> c{SubgroupClass(Intransitive{1}), SubgroupClass(Imprimitive{3, 2})};
    CHECK(verify_cover(a6, c).empty());
    std::vector<SubgroupClass> foreign{SubgroupClass(Intransitive{7})};
    CHECK_THROWS_AS(verify_cover(a6, foreign), InputError);
    std::vector<std::size_t> bad_idx{99};
    CHECK_THROWS_AS(verify_cover_indices(a6, bad_idx), InputError);
}

TEST_CASE("small exact values") {
    struct Case {
        int n;
        Flavor f;
        std::size_t gamma;
    };
    for (auto c : {Case{10, Flavor::S, 3}, Case{12, Flavor::S, 4}, Case{6, Flavor::A, 2}, Case{10, Flavor::A, 3},
                   Case{12, Flavor::A, 4}, Case{18, Flavor::A, 5}, Case{15, Flavor::S, 5}, Case{30, Flavor::S, 7},
                   Case{30, Flavor::A, 7}}) {
        auto mm = build_instance(c.n, c.f);
        auto r = min_cover(mm);
        CHECK_MESSAGE(r.minimum_size == c.gamma, to_string(c.f) << c.n);
        CHECK(r.conditional);
        CHECK_FALSE(r.timed_out);
        CHECK(verify_cover_indices(mm, r.canonical_cover).empty());
        CHECK(r.canonical_cover.size() == r.minimum_size);
        CHECK(r.stats.greedy_size >= r.minimum_size);
        if (factorize(c.n).r() >= 2)
            CHECK(static_cast<Int>(r.stats.greedy_size) <= g_value(c.n) + 1);
    }
}

TEST_CASE("A_12 with and without M12") {
    auto plain = min_cover(build_instance(12, Flavor::A));
    auto mm = build_instance(12, Flavor::A, with_m12());
    auto r = min_cover(mm);
    CHECK(plain.minimum_size == 4);
    CHECK(r.minimum_size == 3);
    CHECK(r.minimum_size <= plain.minimum_size);
    CHECK_FALSE(r.conditional);
    auto l = labels(r.canonical_classes);
    std::sort(l.begin(), l.end());
    CHECK(l == std::vector<std::string>{"M12", "P:5", "W:3x4"});
}

TEST_CASE("infeasible instance names a witness") {
    auto mm = build_instance(7, Flavor::A);
    try {
        (void)min_cover(mm);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.witness() == "7");
    }
}

TEST_CASE("solver equals exhaustive search for universes of at most 12 classes") {
    std::size_t instances = 0;
    for (int n = 3; n <= 15; ++n)
        for (Flavor f : {Flavor::S, Flavor::A}) {
            if (f == Flavor::A && n < 4)
                continue;
            auto mm = build_instance(n, f);
            if (mm.class_count() > 12)
                continue;
            auto [best, covers] = exhaustive(mm);
            ++instances;
            if (best == 0) {
                CHECK_THROWS_AS((void)min_cover(mm), InfeasibleError);
                continue;
            }
            SolveOptions o;
            o.enumerate_all = true;
            auto r = min_cover(mm, o);
            REQUIRE_MESSAGE(r.minimum_size == best, to_string(f) << n);
            REQUIRE(r.all_minimum_covers.has_value());
            CHECK(*r.all_minimum_covers == covers);
            CHECK(r.canonical_cover == covers.front());
        }
    CHECK(instances >= 20);
}

TEST_CASE("enumerating with merged classes and the cap") {
    auto mm = build_instance(12, Flavor::S);
    SolveOptions o;
    o.enumerate_all = true;
    auto all = min_cover(mm, o);
    REQUIRE(all.all_minimum_covers);
    CHECK(all.all_minimum_covers->size() == exhaustive(mm).second.size());
    CHECK_FALSE(all.truncated);
    o.max_covers = 3;
    auto cut = min_cover(mm, o);
    CHECK(cut.truncated);
    CHECK(cut.all_minimum_covers->size() == 3);
    CHECK(cut.canonical_cover == all.canonical_cover);
}

TEST_CASE("determinism across thread counts") {
    for (auto [n, f] : {std::pair{30, Flavor::S}, std::pair{30, Flavor::A}, std::pair{36, Flavor::A},
                        std::pair{24, Flavor::S}}) {
        auto mm = build_instance(n, f);
        SolveOptions one, four;
        one.enumerate_all = four.enumerate_all = true;
        four.threads = 4;
        auto a = min_cover(mm, one);
        auto b = min_cover(mm, four);
        CHECK(a.minimum_size == b.minimum_size);
        CHECK(a.canonical_cover == b.canonical_cover);
        CHECK(*a.all_minimum_covers == *b.all_minimum_covers);
    }
}

TEST_CASE("time limit") {
    auto mm = build_instance(48, Flavor::S);
    SolveOptions o;
    o.time_limit_seconds = 1e-9;
    auto r = min_cover(mm, o);
    CHECK(r.timed_out);
    CHECK(verify_cover_indices(mm, r.canonical_cover).empty());
}

TEST_CASE("structure report") {
    auto mm = build_instance(30, Flavor::S);
    SolveOptions o;
    o.enumerate_all = true;
    auto r = min_cover(mm, o);
    auto rep = analyze_min_covers(r, mm);
    CHECK(rep.applicable);
    CHECK(rep.p_min == std::vector<int>{1, 5, 7, 11, 13});
    CHECK(rep.covers.size() == r.all_minimum_covers->size());
    for (const auto& c : rep.covers)
        CHECK(c.intransitive == std::vector<int>{1, 5, 7, 11, 13});
    CHECK(rep.agree + rep.disagree == rep.covers.size());

    auto a6 = build_instance(6, Flavor::A);
    auto r6 = min_cover(a6, o);
    auto rep6 = analyze_min_covers(r6, a6);
    CHECK(rep6.covers.size() == r6.all_minimum_covers->size());
    CHECK_THROWS_AS(analyze_min_covers(min_cover(a6), a6), InputError);
}
