#pragma once

#include <cstdint>
#include <vector>

namespace ncover {

using Int = std::int64_t;

struct PrimePower {
    Int prime;
    int exponent;

    bool operator==(const PrimePower&) const = default;
};

/// n together with its prime-power decomposition, primes strictly increasing.
class Factorization {
public:
    Factorization(Int n, std::vector<PrimePower> primes);

    Int n() const noexcept { return n_; }
    int r() const noexcept { return static_cast<int>(primes_.size()); }
    const std::vector<PrimePower>& primes() const noexcept { return primes_; }

    /// 1-based, matching the usual p_1 < p_2 < ... numbering.
    Int prime(int i) const { return primes_.at(static_cast<std::size_t>(i - 1)).prime; }
    int exponent(int i) const { return primes_.at(static_cast<std::size_t>(i - 1)).exponent; }

    bool is_prime_power() const noexcept { return primes_.size() == 1; }

private:
    Int n_;
    std::vector<PrimePower> primes_;
};

/// Index sets I and J over {1..r}, disjoint.  P_I^J is the set of x in [1,n]
/// divisible by every p_i (i in I) and by no p_j (j in J).
struct IndexSpec {
    std::vector<int> I;
    std::vector<int> J;
};

Factorization factorize(Int n);

bool is_prime(Int n);
Int gcd(Int a, Int b);

/// Throws InputError unless I, J are disjoint subsets of {1..r}.
void validate(const Factorization& f, const IndexSpec& spec);

/// (n/2)(1-1/p_1)(1-1/p_2) + 2.  DomainError when r < 2.
Int g_value(const Factorization& f);
Int g_value(Int n);

/// |P_I^J| = n * prod_{i in I} 1/p_i * prod_{j in J} (1 - 1/p_j).
Int count_full(const Factorization& f, const IndexSpec& spec);

/// |P_I^J ∩ [1, n/2)| by the parity/2-adic case split.  Requires n >= 3.
Int count_half_open(const Factorization& f, const IndexSpec& spec);

/// {x : 1 <= x < n/2, gcd(x, n) = d}.  InputError when d does not divide n.
std::vector<Int> gcd_class_indices(const Factorization& f, Int d);

/// All positive divisors of n, ascending.
std::vector<Int> divisors(Int n);

} // namespace ncover
