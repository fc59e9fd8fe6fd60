#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncover/universe.hpp"

namespace ncover {

/// {P_x : gcd(x, p_1 p_2) = 1} together with S_{p_1} wr S_{n/p_1} and
/// S_{p_2} wr S_{n/p_2}; always of size g(n).  DomainError when r < 2.
std::vector<SubgroupClass> build_standard_cover(int n, Flavor flavor);

/// Indices (into matrix.types()) of types no class of the cover contains.
/// InputError when a cover class is not part of the matrix universe.
std::vector<std::size_t> verify_cover(const MembershipMatrix& matrix, std::span<const SubgroupClass> cover);
std::vector<std::size_t> verify_cover_indices(const MembershipMatrix& matrix, std::span<const std::size_t> cover);

struct SolveOptions {
    bool enumerate_all = false;
    std::size_t max_covers = 100000;
    double time_limit_seconds = 0; // 0: unlimited
    int threads = 1;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::size_t types_total = 0;
    std::size_t distinct_columns = 0; // types after merging equal covering sets
    std::size_t types_reduced = 0;    // after dropping dominated types
    std::size_t classes_total = 0;
    std::size_t classes_reduced = 0; // distinct non-empty classes on the reduced types
    std::size_t greedy_size = 0;
    double wall_seconds = 0;
};

struct CoverResult {
    int n = 0;
    Flavor flavor = Flavor::S;
    std::size_t minimum_size = 0;
    /// Lexicographically least minimum cover (sorted class indices).
    std::vector<std::size_t> canonical_cover;
    std::vector<SubgroupClass> canonical_classes;
    /// Every minimum cover, each sorted, the list sorted; only when requested.
    std::optional<std::vector<std::vector<std::size_t>>> all_minimum_covers;
    bool truncated = false;   // all_minimum_covers hit max_covers
    bool conditional = true;  // universe had no primitive data
    bool timed_out = false;   // minimum_size is then only an upper bound
    SolveStats stats;
};

/// Exact minimum set cover of the matrix types by its classes.
/// InfeasibleError (with a witness type) when some type has no class.
CoverResult min_cover(const MembershipMatrix& matrix, const SolveOptions& options = {});

struct CoverShape {
    std::vector<int> intransitive; // x values, ascending
    std::vector<std::string> others;
    bool intransitive_is_p_min = false;
    bool others_are_two_wreaths = false; // one S_b wr S_m with b in {p1, n/p1}, one with b in {p2, n/p2}
};

struct StructureReport {
    int n = 0;
    bool applicable = false; // n is not a prime power
    std::vector<int> p_min;
    std::vector<CoverShape> covers;
    std::size_t agree = 0;
    std::size_t disagree = 0;
    bool truncated = false;
};

/// Shape of every minimum cover against the P_min prediction.  A report,
/// nothing is asserted.  InputError when all_minimum_covers is missing.
StructureReport analyze_min_covers(const CoverResult& result, const MembershipMatrix& matrix);

} // namespace ncover
