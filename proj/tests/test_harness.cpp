#include <doctest.h>

#include <filesystem>

#include "ncover/error.hpp"
#include "ncover/harness.hpp"

using namespace ncover;

namespace {

const int kTableS[] = {2, 2, 2, 2, 3, 3, 4, 3, 5, 4};
const int kTableA[] = {0, 2, 2, 2, 2, 2, 3, 3, 4, 3};

const FixtureCheck* find_check(const FixtureReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("known values") {
    auto k = known_gamma(27, Flavor::S);
    CHECK(k.kind == KnownKind::Exact);
    CHECK(k.lo == 10);
    k = known_gamma(16, Flavor::A);
    CHECK(k.kind == KnownKind::Exact);
    CHECK(k.lo == 5);
    CHECK(known_gamma(15, Flavor::S).lo == 5);
    CHECK(known_gamma(15, Flavor::S).kind == KnownKind::Exact);
    CHECK(known_gamma(12, Flavor::A).lo == 3);
    CHECK(known_gamma(9, Flavor::S).lo == 4);
    CHECK(known_gamma(30, Flavor::S).lo == 7);
    CHECK(known_gamma(255, Flavor::S).lo == 70);
    CHECK(known_gamma(66, Flavor::A).lo == 13);
    CHECK(known_gamma(66, Flavor::A).kind == KnownKind::Exact);
    CHECK(known_gamma(36, Flavor::A).kind == KnownKind::Exact);
    CHECK(known_gamma(60, Flavor::A).kind == KnownKind::ConjecturedG);
    CHECK(known_gamma(36, Flavor::S).kind == KnownKind::ConjecturedG);
    CHECK(known_gamma(105, Flavor::A).kind == KnownKind::Unknown);
    CHECK(known_gamma(14, Flavor::S).kind == KnownKind::Unknown);
    CHECK(known_gamma(14, Flavor::A).lo == g_value(14) - 1);
    auto s8 = known_statements(8, Flavor::S);
    REQUIRE(s8.size() == 2);
    CHECK(s8[0].kind == KnownKind::Exact);
    CHECK(s8[1].kind == KnownKind::Range);
    CHECK(s8[1].lo == 2);
    CHECK(s8[1].hi == 3);
    CHECK(s8[1].admits(3));
    CHECK(known_gamma(17, Flavor::A).kind == KnownKind::Range);
    CHECK_THROWS_AS(known_gamma(2, Flavor::S), InputError);
    CHECK_THROWS_AS(known_gamma(3, Flavor::A), InputError);
}

TEST_CASE("known values are internally consistent") {
    for (int n = 3; n <= 12; ++n)
        for (Flavor f : {Flavor::S, Flavor::A}) {
            if (f == Flavor::A && n < 4)
                continue;
            const int table = f == Flavor::S ? kTableS[n - 3] : kTableA[n - 3];
            for (const auto& k : known_statements(n, f))
                REQUIRE_MESSAGE(k.admits(table), to_string(f) << n << " " << k.source);
        }
    for (int n = 4; n <= 400; ++n)
        for (Flavor f : {Flavor::S, Flavor::A}) {
            auto all = known_statements(n, f);
            for (const auto& k : all) {
                REQUIRE(k.lo <= k.hi);
                // an exact value lies in every range that applies
                if (k.kind == KnownKind::Exact)
                    for (const auto& other : all)
                        if (other.kind == KnownKind::Range || other.kind == KnownKind::Exact)
                            REQUIRE_MESSAGE(other.admits(k.lo), to_string(f) << n);
            }
        }
}

TEST_CASE("standard cover check") {
    CHECK(check_standard_cover(12, Flavor::S).empty());
    CHECK(check_standard_cover(42, Flavor::A).empty());
    CHECK_THROWS_AS(check_standard_cover(16, Flavor::S), DomainError);
}

TEST_CASE("verify_conjectures over 3..12") {
    VerifyOptions o;
    o.from = 3;
    o.to = 12;
    auto rep = verify_conjectures(o);
    REQUIRE(rep.entries.size() == 20);
    const VerifyEntry* a12 = nullptr;
    const VerifyEntry* s8 = nullptr;
    for (const auto& e : rep.entries) {
        if (e.n == 12 && e.flavor == Flavor::A)
            a12 = &e;
        if (e.n == 8 && e.flavor == Flavor::S)
            s8 = &e;
        if (e.g && e.gamma_modeled)
            CHECK(static_cast<Int>(*e.gamma_modeled) <= *e.g);
    }
    REQUIRE(a12);
    CHECK(a12->status == "ok");
    CHECK(*a12->gamma_modeled == 4);
    CHECK(a12->verdict == "mismatch");
    CHECK(a12->conditional);
    REQUIRE(s8);
    CHECK(s8->known.kind == KnownKind::Exact);
    CHECK(*s8->gamma_modeled == 3);
    CHECK(s8->verdict == "match");
    CHECK(rep.entries[0].status == "ok"); // S_3
    CHECK(rep.entries[1].status == "skipped"); // A_3

    // byte-identical apart from stats
    auto again = verify_conjectures(o);
    CHECK(to_json(rep, false).dump() == to_json(again, false).dump());
    o.threads = 3;
    CHECK(to_json(verify_conjectures(o), false).dump() == to_json(rep, false).dump());

    auto csv = to_csv(rep);
    CHECK(csv.rfind("n,gamma_S,gamma_A,g,", 0) == 0);
    CHECK(csv.find("\n12,4,4,4,true,true,4,3\n") != std::string::npos);
    CHECK(csv.find("\n7,4,infeasible,NA,") != std::string::npos);
}

TEST_CASE("verify_conjectures with primitive data") {
    VerifyOptions o;
    o.from = 12;
    o.to = 12;
    o.flavors = {Flavor::A};
    o.primitive_dir = std::filesystem::path(NCOVER_DATA_DIR) / "primitive";
    auto rep = verify_conjectures(o);
    REQUIRE(rep.entries.size() == 1);
    CHECK(*rep.entries[0].gamma_modeled == 3);
    CHECK(rep.entries[0].verdict == "match");
    CHECK_FALSE(rep.entries[0].conditional);
    o.from = 13;
    o.to = 12;
    CHECK_THROWS_AS(verify_conjectures(o), InputError);
    o.from = 60;
    o.to = 80;
    CHECK_THROWS_AS(verify_conjectures(o), InputError);
}

TEST_CASE("15q fixtures at q = 17") {
    auto r = family_15q_fixtures(17);
    CHECK(r.n == 255);
    CHECK(r.passed());
    CHECK(r.count(CheckStatus::Fail) == 0);
    const auto* a = find_check(r, "|A|");
    REQUIRE(a);
    CHECK(a->computed == "64");
    CHECK(find_check(r, "P_Z =")->computed == "{3,17,20}");
    CHECK(find_check(r, "P_X =")->computed == "{10,68,78}");
    CHECK(find_check(r, "V in no K in P_U")->status == CheckStatus::Pass);
    // the contradicted closing claim is surfaced, not hidden
    CHECK(find_check(r, "U in no P in P_Z or P_X")->status == CheckStatus::Warn);
    CHECK_FALSE(r.note.empty());
    CHECK(to_json(r)["passed"] == true);
    CHECK(to_text(r).find("PASS |A|") != std::string::npos);
}

TEST_CASE("fixture preconditions") {
    auto message = [](auto fn) {
        try {
            fn();
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message([] { family_15q_fixtures(7); }).find("q = 2 (mod 15)") != std::string::npos);
    CHECK(message([] { family_15q_fixtures(15); }).find("prime") != std::string::npos);
    CHECK(message([] { family_6q_fixtures(7); }).find("q >= 11") != std::string::npos);
    CHECK_THROWS_AS(example_fixtures(5), InputError);
    CHECK_THROWS_AS(family_15q_fixtures(47), InputError); // degree beyond 255
}

TEST_CASE("6q fixtures at q = 11") {
    auto r = family_6q_fixtures(11);
    CHECK(r.passed());
    const auto* g = find_check(r, "|G|");
    REQUIRE(g);
    CHECK(g->status == CheckStatus::Warn);
    CHECK(g->computed.rfind("1", 0) == 0);
    CHECK(g->expected == "2");
    CHECK(r.count(CheckStatus::Warn) == 1);
    for (Int q : {13, 17, 19, 23, 29, 31, 37, 41})
        CHECK(family_6q_fixtures(q).passed());
}

TEST_CASE("example fixtures") {
    auto r7 = example_fixtures(7);
    CHECK(r7.passed());
    CHECK(r7.checks.size() == 6);
    auto r11 = example_fixtures(11);
    CHECK(r11.passed());
    CHECK(r11.checks.size() == 8);
    CHECK(find_check(r11, "V=84,59,18,4")->status == CheckStatus::Pass);
    CHECK(example_fixtures(13).passed());
}
