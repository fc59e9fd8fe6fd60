#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncover/arith.hpp"
#include "ncover/bitset.hpp"
#include "ncover/typesys.hpp"

namespace ncover {

enum class Flavor { S, A };

std::string to_string(Flavor f);
Flavor parse_flavor(std::string_view text);

/// S_x x S_{n-x}, 1 <= x < n/2.
struct Intransitive {
    int x;
    bool operator==(const Intransitive&) const = default;
};
/// S_b wr S_m, b*m = n, b, m >= 2.
struct Imprimitive {
    int b;
    int m;
    bool operator==(const Imprimitive&) const = default;
};
/// A_n itself (only a candidate for G = S_n).
struct Alternating {
    bool operator==(const Alternating&) const = default;
};
/// A primitive class whose conjugate union is given as a list of types.
struct PrimitiveExternal {
    std::string name;
    std::vector<CycleType> covered;
    bool operator==(const PrimitiveExternal&) const = default;
};

/// One conjugacy class of candidate basic components.  For G = A_n the
/// intransitive and imprimitive variants stand for their intersection with A_n.
class SubgroupClass {
public:
    using Variant = std::variant<Intransitive, Imprimitive, Alternating, PrimitiveExternal>;

    SubgroupClass(Variant v) : value_(std::move(v)) {}

    static SubgroupClass intransitive(int n, int x);
    static SubgroupClass imprimitive(int n, int b);

    /// "P:x", "W:bxm" (or "W:b"), "A".
    static SubgroupClass parse(std::string_view spec, int n);

    const Variant& value() const noexcept { return value_; }
    template <class T>
    const T* get_if() const noexcept { return std::get_if<T>(&value_); }

    /// Stable display label: "P:5", "W:3x4", "A", or the external name.
    std::string label() const;

    bool operator==(const SubgroupClass&) const = default;

private:
    Variant value_;
};

/// Contents of one primitive data file.
struct PrimitiveData {
    int n = 0;
    Flavor flavor = Flavor::S;
    std::vector<PrimitiveExternal> classes;
    std::string source; // path or "<memory>"
};

/// Validates sums, parity (for A) and canonical order; LoadError names the entry.
PrimitiveData parse_primitive_data(const nlohmann::json& j, const std::string& source = "<memory>");
PrimitiveData load_primitive_data(const std::filesystem::path& path);
nlohmann::json to_json(const PrimitiveData& data);

/// Every *.json file in dir whose (n, group) matches.  Files for other
/// instances are skipped; malformed files still raise LoadError.
std::vector<PrimitiveData> load_primitive_dir(const std::filesystem::path& dir, int n, Flavor flavor);

struct UniverseOptions {
    std::vector<PrimitiveData> primitive;
};

/// Intransitive by x, imprimitive by b, A_n (flavor S only), then external
/// classes sorted by name.
std::vector<SubgroupClass> build_universe(int n, Flavor flavor, const UniverseOptions& options = {});

/// x -> gcd(x, p_1 p_2) == 1.
class PMinPredicate {
public:
    explicit PMinPredicate(Int n);
    bool operator()(Int x) const { return gcd(x, p1p2_) == 1; }
    Int n() const noexcept { return n_; }

private:
    Int n_;
    Int p1p2_;
};

PMinPredicate p_min_predicate(Int n);
/// {x < n/2 : gcd(x, p_1 p_2) = 1}, ascending.
std::vector<int> p_min_set(int n);

/// Type-versus-class coverage.  Row c holds the indices of types that some
/// member of class c contains.  Immutable once built.
class MembershipMatrix {
public:
    int n() const noexcept { return types_->n(); }
    Flavor flavor() const noexcept { return flavor_; }
    const TypeIndex& types() const noexcept { return *types_; }
    std::shared_ptr<const TypeIndex> types_ptr() const noexcept { return types_; }
    const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t type_count() const noexcept { return types_->size(); }
    const Bitset& row(std::size_t c) const { return rows_.at(c); }

    std::optional<std::size_t> class_index(const SubgroupClass& cls) const;
    /// True when no primitive class is present (the optimum is then only
    /// an upper bound for the true covering number).
    bool conditional() const noexcept;

private:
    friend MembershipMatrix build_matrix(std::vector<SubgroupClass>, std::shared_ptr<const TypeIndex>, Flavor,
                                         int);
    Flavor flavor_ = Flavor::S;
    std::shared_ptr<const TypeIndex> types_;
    std::vector<SubgroupClass> classes_;
    std::vector<Bitset> rows_;
};

/// Fills every row.  `types` must be the full index for flavor S and the
/// even index for flavor A.  Work is split over `threads` workers on
/// 64-type aligned chunks; the result does not depend on the thread count.
MembershipMatrix build_matrix(std::vector<SubgroupClass> universe, std::shared_ptr<const TypeIndex> types,
                              Flavor flavor, int threads = 1);

/// Enumerate types, build the universe and the matrix in one go.
MembershipMatrix build_instance(int n, Flavor flavor, const UniverseOptions& options = {}, int threads = 1,
                                int cap = kDefaultTypeCap);

} // namespace ncover
