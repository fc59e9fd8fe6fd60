#include "ncover/membership.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "ncover/error.hpp"

namespace ncover {

namespace {

int sum_of(std::span<const int> parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

void check_block_size(int n, int b) {
    if (b < 2 || 2 * b > n || n % b != 0) {
        std::ostringstream os;
        os << "imprimitive class needs b | n with 2 <= b <= n/2; got b=" << b << " for n=" << n;
        throw InputError(os.str());
    }
}

/// Depth-first search for a BlockGrouping.  Parts are held as distinct
/// values (descending) with multiplicities so repeated parts never branch
/// on which copy goes where.  A new group is always anchored at the largest
/// unplaced part; its m_g runs over divisors of the anchor, largest first.
class GroupingSearch {
public:
    GroupingSearch(std::span<const int> parts, int b) : b_(b) {
        std::vector<int> sorted(parts.begin(), parts.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        for (int v : sorted) {
            if (!vals_.empty() && vals_.back() == v)
                ++cnt_.back();
            else {
                vals_.push_back(v);
                cnt_.push_back(1);
            }
        }
        left_ = static_cast<int>(sorted.size());
        m_left_ = sum_of(sorted) / b;
    }

    bool run() { return place_next_group(); }

    BlockGrouping witness(int n) const {
        BlockGrouping w;
        w.block_size = b_;
        w.block_count = n / b_;
        for (std::size_t g = 0; g < marks_.size(); ++g) {
            const std::size_t begin = marks_[g].first;
            const std::size_t end = g + 1 < marks_.size() ? marks_[g + 1].first : stack_.size();
            BlockGroup grp;
            grp.block_orbit = marks_[g].second;
            grp.cycle_lengths.assign(stack_.begin() + static_cast<std::ptrdiff_t>(begin),
                                     stack_.begin() + static_cast<std::ptrdiff_t>(end));
            w.groups.push_back(std::move(grp));
        }
        return w;
    }

private:
    std::string state_key() const {
        return std::string(reinterpret_cast<const char*>(cnt_.data()), cnt_.size() * sizeof(int));
    }

    bool place_next_group() {
        if (left_ == 0)
            return true;
        std::string key;
        if (vals_.size() > 3) {
            key = state_key();
            if (failed_.contains(key))
                return false;
        }

        std::size_t a = 0;
        while (cnt_[a] == 0)
            ++a;
        const int x = vals_[a];
        --cnt_[a];
        --left_;
        bool found = false;
        for (int m_g = x; m_g >= 1 && !found; --m_g) {
            if (x % m_g != 0 || m_g > m_left_)
                continue;
            if (x > m_g * b_)
                break; // smaller m_g only increases x / m_g
            m_left_ -= m_g;
            marks_.emplace_back(stack_.size(), m_g);
            stack_.push_back(x);
            found = fill(a, b_ - x / m_g, m_g);
            if (!found) {
                stack_.pop_back();
                marks_.pop_back();
                m_left_ += m_g;
            }
        }
        if (!found) {
            ++cnt_[a];
            ++left_;
            if (!key.empty())
                failed_.insert(std::move(key));
        }
        return found;
    }

    bool fill(std::size_t from, int need, int m_g) {
        if (need == 0)
            return place_next_group();
        for (std::size_t j = from; j < vals_.size(); ++j) {
            if (cnt_[j] == 0 || vals_[j] % m_g != 0)
                continue;
            const int d = vals_[j] / m_g;
            if (d > need)
                continue;
            const int max_take = std::min<int>(cnt_[j], need / d);
            for (int c = max_take; c >= 1; --c) {
                cnt_[j] -= c;
                left_ -= c;
                stack_.insert(stack_.end(), static_cast<std::size_t>(c), vals_[j]);
                if (fill(j + 1, need - c * d, m_g))
                    return true;
                stack_.resize(stack_.size() - static_cast<std::size_t>(c));
                left_ += c;
                cnt_[j] += c;
            }
        }
        return false;
    }

    int b_;
    int left_ = 0;
    int m_left_ = 0;
    std::vector<int> vals_;
    std::vector<int> cnt_;
    std::vector<int> stack_;
    std::vector<std::pair<std::size_t, int>> marks_;
    std::unordered_set<std::string> failed_;
};

/// Necessary condition: every part x must admit some m_g | x with
/// x / m_g <= b and m_g <= m.
bool every_part_placeable(std::span<const int> parts, int b, int m) {
    for (int x : parts) {
        bool ok = false;
        for (int m_g = std::min(x, m); m_g >= 1 && m_g * b >= x; --m_g)
            if (x % m_g == 0) {
                ok = true;
                break;
            }
        if (!ok)
            return false;
    }
    return true;
}

std::optional<BlockGrouping> search(std::span<const int> parts, int b) {
    const int n = sum_of(parts);
    check_block_size(n, b);
    const int m = n / b;

    BlockGrouping w;
    w.block_size = b;
    w.block_count = m;

    if (std::all_of(parts.begin(), parts.end(), [&](int x) { return x % b == 0; })) {
        for (int x : parts)
            w.groups.push_back({{x}, x / b});
        return w;
    }
    if (std::all_of(parts.begin(), parts.end(), [&](int x) { return x % m == 0; })) {
        w.groups.push_back({std::vector<int>(parts.begin(), parts.end()), m});
        std::sort(w.groups.back().cycle_lengths.begin(), w.groups.back().cycle_lengths.end(),
                  std::greater<>());
        return w;
    }
    if (parts.size() == 2) {
        const int x = std::min(parts[0], parts[1]);
        if (std::gcd(x, n) == 1)
            return std::nullopt;
    }
    if (!every_part_placeable(parts, b, m))
        return std::nullopt;

    GroupingSearch s(parts, b);
    if (!s.run())
        return std::nullopt;
    return s.witness(n);
}

} // namespace

std::vector<int> BlockGroup::intersections() const {
    std::vector<int> d;
    d.reserve(cycle_lengths.size());
    for (int x : cycle_lengths)
        d.push_back(x / block_orbit);
    return d;
}

bool BlockGrouping::certifies(std::span<const int> parts) const {
    if (block_size < 2 || block_count < 2)
        return false;
    std::vector<int> used;
    int orbit_sum = 0;
    for (const auto& g : groups) {
        if (g.block_orbit < 1 || g.cycle_lengths.empty())
            return false;
        int dsum = 0;
        for (int x : g.cycle_lengths) {
            if (x % g.block_orbit != 0)
                return false;
            dsum += x / g.block_orbit;
            used.push_back(x);
        }
        if (dsum != block_size)
            return false;
        orbit_sum += g.block_orbit;
    }
    if (orbit_sum != block_count)
        return false;
    std::vector<int> want(parts.begin(), parts.end());
    std::sort(want.begin(), want.end());
    std::sort(used.begin(), used.end());
    return want == used;
}

std::string BlockGrouping::to_string() const {
    std::ostringstream os;
    os << "b=" << block_size << " m=" << block_count << ":";
    for (const auto& g : groups) {
        os << " {";
        for (std::size_t i = 0; i < g.cycle_lengths.size(); ++i)
            os << (i ? "," : "") << g.cycle_lengths[i];
        os << " | m_g=" << g.block_orbit << " d=";
        auto d = g.intersections();
        for (std::size_t i = 0; i < d.size(); ++i)
            os << (i ? "," : "") << d[i];
        os << "}";
    }
    return os.str();
}

bool in_intransitive(std::span<const int> parts, int x) {
    if (x < 1)
        return false;
    std::vector<char> reach(static_cast<std::size_t>(x) + 1, 0);
    reach[0] = 1;
    for (int p : parts) {
        if (p > x)
            continue;
        for (int s = x; s >= p; --s)
            if (reach[static_cast<std::size_t>(s - p)])
                reach[static_cast<std::size_t>(s)] = 1;
        if (reach[static_cast<std::size_t>(x)])
            return true;
    }
    return reach[static_cast<std::size_t>(x)] != 0;
}

bool in_intransitive(const CycleType& t, int x) {
    if (x < 1 || 2 * x >= t.n())
        throw InputError("intransitive class needs 1 <= x < n/2");
    return in_intransitive(t.span(), x);
}

std::optional<BlockGrouping> imprimitive_witness(std::span<const int> parts, int b) { return search(parts, b); }

std::optional<BlockGrouping> imprimitive_witness(const CycleType& t, int b) { return search(t.span(), b); }

bool in_imprimitive(std::span<const int> parts, int b) { return search(parts, b).has_value(); }

bool in_imprimitive(const CycleType& t, int b) { return in_imprimitive(t.span(), b); }

bool in_alternating(const CycleType& t) { return is_even(t); }

bool coprime_two_part_exclusion(const CycleType& t) {
    if (t.k() != 2)
        throw InputError("coprime two-part exclusion needs a type with exactly two parts");
    return std::gcd(t.parts()[1], t.n()) == 1;
}

std::optional<bool> pattern_membership(std::span<const int> parts, int b) {
    const int n = sum_of(parts);
    check_block_size(n, b);
    const std::size_t k = parts.size();
    if (k < 2 || k > 4)
        return std::nullopt;
    int all = 0;
    for (int x : parts)
        all = std::gcd(all, x);
    if (all != 1)
        return std::nullopt;

    auto divides = [](int d, int v) { return d > 0 && v % d == 0; };
    // rest: cycles sharing the remaining blocks; their block count must divide their gcd
    auto rest_ok = [&](int union_size, int rest_gcd) {
        return (n - union_size) % b == 0 && divides((n - union_size) / b, rest_gcd);
    };

    if (k == 2)
        return false;

    if (k == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            const int x3 = parts[i];
            const int x1 = parts[(i + 1) % 3], x2 = parts[(i + 2) % 3];
            if (divides(b, std::gcd(x3, n)) && rest_ok(x3, std::gcd(x1, x2)))
                return true;
        }
        return false;
    }

    // k == 4
    for (std::size_t i = 0; i < 4; ++i) {
        int g = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i)
                g = std::gcd(g, parts[j]);
        if (divides(b, std::gcd(parts[i], n)) && rest_ok(parts[i], g))
            return true; // one cycle is a union of blocks, three share the rest
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            std::size_t o[2];
            std::size_t c = 0;
            for (std::size_t t = 0; t < 4; ++t)
                if (t != i && t != j)
                    o[c++] = t;
            const int x3 = parts[i], x4 = parts[j];
            const int g12 = std::gcd(parts[o[0]], parts[o[1]]);
            // two cycles each a union of blocks
            if (divides(b, std::gcd(std::gcd(x3, x4), n)) && rest_ok(x3 + x4, g12))
                return true;
            // two pairs, each pair sharing its own blocks
            if (divides(b, std::gcd(x3 + x4, n)) && divides((x3 + x4) / b, std::gcd(x3, x4)) &&
                rest_ok(x3 + x4, g12))
                return true;
        }
    return false;
}

} // namespace ncover
