#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncover/typesys.hpp"
#include "ncover/universe.hpp"

namespace ncover {

/// Permutation of {0..n-1} as its image list.
using Perm = std::vector<std::uint8_t>;

/// "(1,2,3)(4,5)" on points 1..n.  InputError on a bad point or repeats.
Perm parse_cycles(std::string_view text, int n);

Perm identity_perm(int n);
/// x -> b(a(x))
Perm compose(const Perm& a, const Perm& b);

CycleType cycle_type(const Perm& p);
bool is_even_perm(const Perm& p);

/// All elements of the group generated by gens (breadth-first closure).
/// InputError when more than cap elements turn up.
std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t cap);

/// For a type whose parts are odd and distinct the S_n class splits in two
/// A_n classes.  Returns 0 when p is A_n-conjugate to the standard element
/// (cycles on consecutive points, longest first), 1 otherwise.
/// InputError for any other type.
int split_half(const Perm& p);

struct GeneratedClass {
    PrimitiveData data;
    std::size_t order = 0;
    /// types of split A_n classes met in only one half (left out of data)
    std::vector<CycleType> one_half_only;
};

/// Enumerates M12 < A12 from its standard generators, checks the order,
/// and lists the covered types.  A split type is kept only when the group
/// meets both of its A_12 classes, since A_12-conjugates never move an
/// element from one half to the other.
GeneratedClass generate_m12();

} // namespace ncover
