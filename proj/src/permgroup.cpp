#include "ncover/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "ncover/error.hpp"

namespace ncover {

Perm identity_perm(int n) {
    if (n < 1 || n > 255)
        throw InputError("permutation degree out of range");
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

Perm parse_cycles(std::string_view text, int n) {
    Perm p = identity_perm(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && text[i] == ' ')
            ++i;
    };
    for (skip_space(); i < text.size(); skip_space()) {
        if (text[i] != '(')
            throw InputError("bad cycle notation: " + std::string(text));
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_space();
            int v = 0;
            bool digits = false;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + (text[i++] - '0');
                digits = true;
            }
            if (!digits || v < 1 || v > n)
                throw InputError("bad point in cycle notation: " + std::string(text));
            if (seen[static_cast<std::size_t>(v - 1)])
                throw InputError("repeated point in cycle notation: " + std::string(text));
            seen[static_cast<std::size_t>(v - 1)] = true;
            cyc.push_back(v - 1);
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw InputError("bad cycle notation: " + std::string(text));
        }
        for (std::size_t k = 0; k < cyc.size(); ++k)
            p[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
    }
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = b[a[i]];
    return c;
}

namespace {

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> cyc;
        for (std::size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            cyc.push_back(static_cast<int>(x));
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

} // namespace

CycleType cycle_type(const Perm& p) {
    std::vector<int> parts;
    for (const auto& c : cycles_of(p))
        parts.push_back(static_cast<int>(c.size()));
    return CycleType::from_parts(std::move(parts));
}

bool is_even_perm(const Perm& p) { return is_even(cycle_type(p)); }

std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t cap) {
    if (gens.empty())
        throw InputError("closure needs at least one generator");
    const std::size_t n = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != n)
            throw InputError("generators of different degree");
    auto key = [](const Perm& p) { return std::string(p.begin(), p.end()); };
    std::unordered_set<std::string> seen;
    std::vector<Perm> elems;
    std::deque<Perm> queue;
    Perm id = identity_perm(static_cast<int>(n));
    seen.insert(key(id));
    elems.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Perm next = compose(cur, g);
            if (seen.insert(key(next)).second) {
                if (elems.size() >= cap)
                    throw InputError("group closure exceeds " + std::to_string(cap) + " elements");
                elems.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return elems;
}

int split_half(const Perm& p) {
    auto cycles = cycles_of(p);
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].size() % 2 == 0 || (i > 0 && cycles[i].size() == cycles[i - 1].size()))
            throw InputError("type " + cycle_type(p).to_string() + " does not split in A_n");
    }
    // pi sends the standard element to p; its parity picks the half because
    // the centralizer of the standard element lies in A_n
    Perm pi(p.size());
    std::size_t pos = 0;
    for (auto& c : cycles) {
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        for (int x : c)
            pi[pos++] = static_cast<std::uint8_t>(x);
    }
    return is_even_perm(pi) ? 0 : 1;
}

GeneratedClass generate_m12() {
    const int n = 12;
    const std::vector<Perm> gens = {
        parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", n),
        parse_cycles("(3,7,11,8)(4,10,5,6)", n),
        parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", n),
    };
    const auto elems = closure(gens, 200000);
    if (elems.size() != 95040)
        throw LoadError("M12 closure has order " + std::to_string(elems.size()) + ", expected 95040");

    std::map<CycleType, int> halves; // bit 1: half 0 met, bit 2: half 1 met
    for (const auto& e : elems) {
        CycleType t = cycle_type(e);
        if (!is_even(t))
            throw LoadError("M12 generators produce an odd permutation");
        bool splits = true;
        for (int k = 0; k < t.k(); ++k)
            if (t.parts()[static_cast<std::size_t>(k)] % 2 == 0 ||
                (k > 0 && t.parts()[static_cast<std::size_t>(k)] == t.parts()[static_cast<std::size_t>(k - 1)]))
                splits = false;
        halves[t] |= splits ? (1 << split_half(e)) : 3;
    }

    GeneratedClass out;
    out.order = elems.size();
    out.data.n = n;
    out.data.flavor = Flavor::A;
    out.data.source = "generated";
    PrimitiveExternal cls;
    cls.name = "M12";
    for (const auto& [t, mask] : halves) {
        if (mask == 3)
            cls.covered.push_back(t);
        else
            out.one_half_only.push_back(t);
    }
    // same order as the type index: decreasing
    std::sort(cls.covered.begin(), cls.covered.end(), std::greater<>());
    out.data.classes.push_back(std::move(cls));
    return out;
}

} // namespace ncover
