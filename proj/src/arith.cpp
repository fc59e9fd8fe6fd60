#include "ncover/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncover/error.hpp"

namespace ncover {

Factorization::Factorization(Int n, std::vector<PrimePower> primes)
    : n_(n), primes_(std::move(primes)) {
    Int product = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const auto& pp = primes_[i];
        if (pp.exponent < 1 || !is_prime(pp.prime))
            throw InputError("factorization entry is not a prime power");
        if (i > 0 && primes_[i - 1].prime >= pp.prime)
            throw InputError("factorization primes must be strictly increasing");
        for (int e = 0; e < pp.exponent; ++e)
            product *= pp.prime;
    }
    if (product != n_)
        throw InputError("factorization does not multiply back to n");
}

bool is_prime(Int n) {
    if (n < 2)
        return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Factorization factorize(Int n) {
    if (n < 2)
        throw InputError("factorize: n must be at least 2, got " + std::to_string(n));
    std::vector<PrimePower> primes;
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        primes.push_back({p, e});
    }
    if (rest > 1)
        primes.push_back({rest, 1});
    return Factorization(n, std::move(primes));
}

void validate(const Factorization& f, const IndexSpec& spec) {
    std::vector<char> seen(static_cast<std::size_t>(f.r()) + 1, 0);
    auto mark = [&](int i, char tag) {
        if (i < 1 || i > f.r()) {
            std::ostringstream os;
            os << "index " << i << " outside 1.." << f.r() << " for n=" << f.n();
            throw InputError(os.str());
        }
        if (seen[static_cast<std::size_t>(i)] != 0) {
            std::ostringstream os;
            os << "index " << i << (seen[static_cast<std::size_t>(i)] == tag ? " repeated" : " in both I and J");
            throw InputError(os.str());
        }
        seen[static_cast<std::size_t>(i)] = tag;
    };
    for (int i : spec.I)
        mark(i, 'I');
    for (int j : spec.J)
        mark(j, 'J');
}

Int g_value(const Factorization& f) {
    if (f.r() < 2)
        throw DomainError("g(n) is undefined for the prime power n=" + std::to_string(f.n()));
    const Int p1 = f.prime(1);
    const Int p2 = f.prime(2);
    const Int twice = f.n() / p1 / p2 * (p1 - 1) * (p2 - 1);
    // twice is even whenever r >= 2; it counts x in [1,n) coprime to p1*p2 symmetric about n/2
    return twice / 2 + 2;
}

Int g_value(Int n) { return g_value(factorize(n)); }

Int count_full(const Factorization& f, const IndexSpec& spec) {
    validate(f, spec);
    Int v = f.n();
    for (int i : spec.I)
        v /= f.prime(i);
    for (int j : spec.J)
        v = v / f.prime(j) * (f.prime(j) - 1);
    return v;
}

Int count_half_open(const Factorization& f, const IndexSpec& spec) {
    if (f.n() < 3)
        throw InputError("count_half_open requires n >= 3");
    const Int full = count_full(f, spec);
    const bool odd = f.n() % 2 != 0;
    if (odd)
        return full / 2;

    const bool j_empty = spec.J.empty();
    if (f.exponent(1) == 1) {
        const bool two_in_i = std::find(spec.I.begin(), spec.I.end(), 1) != spec.I.end();
        if (j_empty && !two_in_i)
            return full / 2 - 1;
        return full / 2;
    }
    if (j_empty)
        return full / 2 - 1;
    return full / 2;
}

std::vector<Int> gcd_class_indices(const Factorization& f, Int d) {
    if (d < 1 || f.n() % d != 0) {
        std::ostringstream os;
        os << "gcd class: d=" << d << " does not divide n=" << f.n();
        throw InputError(os.str());
    }
    std::vector<Int> out;
    for (Int x = d; 2 * x < f.n(); x += d)
        if (std::gcd(x, f.n()) == d)
            out.push_back(x);
    return out;
}

std::vector<Int> divisors(Int n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d * d != n)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace ncover
