#include "ncover/typesys.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "ncover/error.hpp"

namespace ncover {

CycleType CycleType::from_parts(std::vector<int> parts) {
    if (parts.empty())
        throw InputError("cycle type needs at least one part");
    for (int p : parts)
        if (p < 1)
            throw InputError("cycle type parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    CycleType t;
    t.n_ = std::accumulate(parts.begin(), parts.end(), 0);
    t.parts_ = std::move(parts);
    return t;
}

CycleType CycleType::parse(std::string_view text, int expected_n) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InputError("bad cycle type \"" + std::string(text) + "\"");
        parts.push_back(value);
        pos = end + 1;
    }
    CycleType t = from_parts(std::move(parts));
    if (expected_n > 0 && t.n() != expected_n)
        throw InputError("cycle type " + t.to_string() + " sums to " + std::to_string(t.n()) +
                         ", expected " + std::to_string(expected_n));
    return t;
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool is_even(std::span<const int> parts) {
    int n = 0;
    for (int p : parts)
        n += p;
    return (n - static_cast<int>(parts.size())) % 2 == 0;
}

bool is_even(const CycleType& t) { return is_even(t.span()); }

CycleType TypeIndex::type(std::size_t i) const {
    auto p = parts(i);
    return CycleType::from_parts(std::vector<int>(p.begin(), p.end()));
}

std::optional<std::size_t> TypeIndex::find(const CycleType& t) const {
    if (t.n() != n_)
        return std::nullopt;
    // stored order is lexicographically decreasing
    auto greater_than = [&](std::size_t i) {
        auto p = parts(i);
        return std::lexicographical_compare(t.parts().begin(), t.parts().end(), p.begin(), p.end());
    };
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (greater_than(mid))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == size())
        return std::nullopt;
    auto p = parts(lo);
    if (std::equal(p.begin(), p.end(), t.parts().begin(), t.parts().end()))
        return lo;
    return std::nullopt;
}

TypeIndex enumerate_types(int n, TypeFilter filter, int cap) {
    if (n < 1)
        throw InputError("enumerate_types: n must be positive");
    if (n > cap || n > 255)
        throw InputError("enumerate_types: n=" + std::to_string(n) + " exceeds the enumeration cap " +
                         std::to_string(std::min(cap, 255)));
    TypeIndex index;
    index.n_ = n;
    index.filter_ = filter;

    // Successor in decreasing lexicographic order: lower the rightmost part
    // above 1 and refill the tail greedily.
    std::vector<int> a{n};
    for (;;) {
        const bool take = filter == TypeFilter::All ||
                          (n - static_cast<int>(a.size())) % 2 == 0;
        if (take) {
            for (int v : a)
                index.parts_.push_back(static_cast<std::uint8_t>(v));
            index.offsets_.push_back(index.parts_.size());
        }
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty())
            break;
        const int v = --a.back();
        int rem = ones + 1;
        while (rem >= v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem > 0)
            a.push_back(rem);
    }
    return index;
}

std::vector<CycleType> two_part_types(int n) {
    std::vector<CycleType> out;
    for (int x = 1; 2 * x < n; ++x)
        out.push_back(CycleType::from_parts({n - x, x}));
    return out;
}

} // namespace ncover
