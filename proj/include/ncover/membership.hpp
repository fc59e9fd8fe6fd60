#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncover/typesys.hpp"

namespace ncover {

/// Cycles of a permutation that run through the same m_g blocks of an
/// imprimitive block system.  Each cycle of length x meets every one of those
/// blocks in x / m_g points, and these intersections add up to the block size.
struct BlockGroup {
    std::vector<int> cycle_lengths;
    int block_orbit = 0; // m_g

    std::vector<int> intersections() const; // d_i = x_i / m_g
};

/// Certificate that a type belongs to S_b wr S_m.
struct BlockGrouping {
    int block_size = 0;  // b
    int block_count = 0; // m
    std::vector<BlockGroup> groups;

    /// Rechecks every structural condition against the given parts.
    bool certifies(std::span<const int> parts) const;
    std::string to_string() const;
};

/// Some sub-multiset of the parts sums to exactly x (S_x x S_{n-x}).
bool in_intransitive(std::span<const int> parts, int x);
bool in_intransitive(const CycleType& t, int x);

/// Membership in S_b wr S_{n/b}.  InputError unless b | n and 2 <= b <= n/2.
bool in_imprimitive(std::span<const int> parts, int b);
bool in_imprimitive(const CycleType& t, int b);

/// Same search, returning a grouping when one exists.
std::optional<BlockGrouping> imprimitive_witness(std::span<const int> parts, int b);
std::optional<BlockGrouping> imprimitive_witness(const CycleType& t, int b);

bool in_alternating(const CycleType& t);

/// For a two-part type [n-x, x] with gcd(x, n) = 1 no imprimitive class can
/// contain it.  Returns true when that exclusion applies (no search needed);
/// false means the caller must run in_imprimitive.  InputError unless k = 2.
bool coprime_two_part_exclusion(const CycleType& t);

/// Closed-form block patterns for globally coprime types with at most four
/// parts: the only groupings possible are 1+2 (k = 3) and 1+3, 1+1+2, 2+2
/// (k = 4).  Returns nullopt when the type is outside that family.  Used to
/// cross-check the general search.
std::optional<bool> pattern_membership(std::span<const int> parts, int b);

} // namespace ncover
