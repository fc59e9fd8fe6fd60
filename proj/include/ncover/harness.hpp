#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncover/arith.hpp"
#include "ncover/solver.hpp"
#include "ncover/universe.hpp"

namespace ncover {

enum class KnownKind { Exact, Range, ConjecturedG, Unknown };

std::string to_string(KnownKind k);

/// What is known about gamma(G) for one instance.  ConjecturedG stores g(n)
/// in lo == hi.
struct KnownValue {
    int n = 0;
    Flavor flavor = Flavor::S;
    KnownKind kind = KnownKind::Unknown;
    Int lo = 0;
    Int hi = 0;
    std::string source;

    /// Whether v is consistent with the statement (Unknown admits anything).
    bool admits(Int v) const noexcept;
    std::string describe() const;
};

/// Strongest applicable statement.  Precedence: small-degree table, then
/// exact theorem values, then closed formulas, then the conjectures.
/// InputError when n < 3 (S) or n < 4 (A).
KnownValue known_gamma(int n, Flavor flavor);

/// Every statement that applies to (n, flavor), strongest first.  Used for
/// internal consistency checks.
std::vector<KnownValue> known_statements(int n, Flavor flavor);

/// Checks the g(n) cover directly: builds rows for the cover classes only and
/// returns the uncovered type labels.  DomainError when r < 2.
std::vector<std::string> check_standard_cover(int n, Flavor flavor, int threads = 1);

struct VerifyOptions {
    int from = 3;
    int to = 12;
    std::vector<Flavor> flavors{Flavor::S, Flavor::A};
    std::optional<std::filesystem::path> primitive_dir;
    int threads = 1;             // batch items run in parallel
    double time_limit_seconds = 0; // per instance
    std::size_t max_covers = 1000; // for the structure summary
    int cap = kDefaultTypeCap;
};

struct VerifyEntry {
    int n = 0;
    Flavor flavor = Flavor::S;
    std::optional<Int> g;
    /// "ok", "infeasible", "timeout", "skipped"
    std::string status;
    std::optional<std::size_t> gamma_modeled;
    bool conditional = true;
    KnownValue known;
    /// "match", "mismatch", "conjecture-holds", "conjecture-differs",
    /// "no-expectation", "not-computed"
    std::string verdict;
    std::vector<std::string> canonical_cover;
    std::string note;
    // minimum-cover shape against P_min (only when r >= 2)
    std::optional<std::size_t> structure_agree;
    std::optional<std::size_t> structure_disagree;
    bool structure_truncated = false;
    SolveStats stats;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyEntry> entries; // by n, then flavor in option order
};

/// Batch run.  Solver failures are recorded per entry, never thrown.
/// InputError on an empty or out-of-cap range.
VerifyReport verify_conjectures(const VerifyOptions& options);

/// stats are left out when with_stats is false; the rest is a pure function
/// of the range and the universe data.
nlohmann::json to_json(const VerifyReport& report, bool with_stats = true);
/// n, gamma_S, gamma_A, g, conditional_S, conditional_A, known_S, known_A
std::string to_csv(const VerifyReport& report);

enum class CheckStatus { Pass, Fail, Warn };

struct FixtureCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string computed;
};

struct FixtureReport {
    std::string family; // "15q", "6q", "examples"
    Int q = 0;
    Int n = 0;
    std::vector<FixtureCheck> checks;
    std::string note;

    bool passed() const noexcept; // no Fail (Warn allowed)
    std::size_t count(CheckStatus s) const noexcept;
};

/// n = 15q, q prime, q = 2 mod 15, q != 12 mod 13.
FixtureReport family_15q_fixtures(Int q);
/// n = 6q, q prime >= 11.
FixtureReport family_6q_fixtures(Int q);
/// Imprimitive exclusion of Z, X, U (q >= 7 prime) and V (also q >= 11,
/// q != 12 mod 13) in degree 15q.
FixtureReport example_fixtures(Int q);

nlohmann::json to_json(const FixtureReport& report);
std::string to_text(const FixtureReport& report);

} // namespace ncover
