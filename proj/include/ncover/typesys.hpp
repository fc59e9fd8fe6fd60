#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncover {

/// Default ceiling on n for full type enumeration; p(70) is about 4.1e6.
inline constexpr int kDefaultTypeCap = 70;

/// A partition of n, parts kept in nonincreasing order.  Identifies one
/// conjugacy class of S_n.
class CycleType {
public:
    CycleType() = default;

    /// Sorts the parts; throws InputError on a non-positive part.
    static CycleType from_parts(std::vector<int> parts);

    /// Parses "235,17,3" (any order).  When expected_n > 0 the sum is checked.
    static CycleType parse(std::string_view text, int expected_n = 0);

    int n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const noexcept { return parts_; }
    std::span<const int> span() const noexcept { return parts_; }

    /// Comma-joined nonincreasing parts, e.g. "235,17,3".
    std::string to_string() const;

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;

private:
    int n_ = 0;
    std::vector<int> parts_;
};

/// Parity of a permutation of this type: even iff n - k is even.
bool is_even(std::span<const int> parts);
bool is_even(const CycleType& t);

enum class TypeFilter { All, Even };

/// Immutable indexed list of cycle types of one n.  Types are stored flat;
/// the order is lexicographically decreasing on the canonical parts, so
/// index 0 is the n-cycle [n] and the last index is [1,...,1].
class TypeIndex {
public:
    int n() const noexcept { return n_; }
    TypeFilter filter() const noexcept { return filter_; }
    std::size_t size() const noexcept { return offsets_.size() - 1; }

    std::span<const std::uint8_t> parts(std::size_t i) const {
        return {parts_.data() + offsets_[i], parts_.data() + offsets_[i + 1]};
    }
    CycleType type(std::size_t i) const;
    std::string label(std::size_t i) const { return type(i).to_string(); }

    std::optional<std::size_t> find(const CycleType& t) const;

private:
    friend TypeIndex enumerate_types(int n, TypeFilter filter, int cap);

    int n_ = 0;
    TypeFilter filter_ = TypeFilter::All;
    std::vector<std::uint8_t> parts_;
    std::vector<std::size_t> offsets_{0};
};

/// All partitions of n (optionally only even ones).  Throws InputError when
/// n < 1 or n exceeds cap (and always above 255, the storage width).
TypeIndex enumerate_types(int n, TypeFilter filter = TypeFilter::All, int cap = kDefaultTypeCap);

/// The two-part types [x, n-x] with 1 <= x < n/2, x ascending.
std::vector<CycleType> two_part_types(int n);

} // namespace ncover
