#include "ncover/universe.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "ncover/error.hpp"
#include "ncover/membership.hpp"

namespace ncover {

std::string to_string(Flavor f) { return f == Flavor::S ? "S" : "A"; }

Flavor parse_flavor(std::string_view text) {
    if (text == "S" || text == "s")
        return Flavor::S;
    if (text == "A" || text == "a")
        return Flavor::A;
    throw InputError("group must be S or A, got \"" + std::string(text) + "\"");
}

SubgroupClass SubgroupClass::intransitive(int n, int x) {
    if (x < 1 || 2 * x >= n)
        throw InputError("intransitive class P:" + std::to_string(x) + " needs 1 <= x < n/2 (n=" +
                         std::to_string(n) + ")");
    return SubgroupClass(Intransitive{x});
}

SubgroupClass SubgroupClass::imprimitive(int n, int b) {
    if (b < 2 || 2 * b > n || n % b != 0)
        throw InputError("imprimitive class W:" + std::to_string(b) + " needs b | n, 2 <= b <= n/2 (n=" +
                         std::to_string(n) + ")");
    return SubgroupClass(Imprimitive{b, n / b});
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("bad class spec \"" + std::string(whole) + "\"");
    return v;
}

} // namespace

SubgroupClass SubgroupClass::parse(std::string_view spec, int n) {
    if (spec == "A")
        return SubgroupClass(Alternating{});
    if (spec.size() > 2 && spec[1] == ':') {
        const std::string_view body = spec.substr(2);
        if (spec[0] == 'P')
            return intransitive(n, parse_int(body, spec));
        if (spec[0] == 'W') {
            const auto x = body.find('x');
            const int b = parse_int(body.substr(0, x), spec);
            SubgroupClass cls = imprimitive(n, b);
            if (x != std::string_view::npos && parse_int(body.substr(x + 1), spec) != n / b)
                throw InputError("class spec \"" + std::string(spec) + "\": b*m must equal n");
            return cls;
        }
    }
    throw InputError("class spec must be P:x, W:bxm or A; got \"" + std::string(spec) + "\"");
}

std::string SubgroupClass::label() const {
    struct Visitor {
        std::string operator()(const Intransitive& c) const { return "P:" + std::to_string(c.x); }
        std::string operator()(const Imprimitive& c) const {
            return "W:" + std::to_string(c.b) + "x" + std::to_string(c.m);
        }
        std::string operator()(const Alternating&) const { return "A"; }
        std::string operator()(const PrimitiveExternal& c) const { return c.name; }
    };
    return std::visit(Visitor{}, value_);
}

PrimitiveData parse_primitive_data(const nlohmann::json& j, const std::string& source) {
    auto fail = [&](const std::string& what) { throw LoadError(source + ": " + what); };
    if (!j.is_object() || !j.contains("n") || !j.contains("group") || !j.contains("classes"))
        fail("expected an object with n, group and classes");
    PrimitiveData data;
    data.source = source;
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        fail("n must be a positive integer");
    data.n = j["n"].get<int>();
    try {
        data.flavor = parse_flavor(j["group"].get<std::string>());
    } catch (const std::exception&) {
        fail("group must be \"S\" or \"A\"");
    }
    if (!j["classes"].is_array())
        fail("classes must be an array");

    std::set<std::string> names;
    for (std::size_t c = 0; c < j["classes"].size(); ++c) {
        const auto& jc = j["classes"][c];
        const std::string where = "class[" + std::to_string(c) + "]";
        if (!jc.is_object() || !jc.contains("name") || !jc["name"].is_string() || !jc.contains("types") ||
            !jc["types"].is_array())
            fail(where + ": expected {name, types}");
        PrimitiveExternal cls;
        cls.name = jc["name"].get<std::string>();
        if (cls.name.empty())
            fail(where + ": empty name");
        if (!names.insert(cls.name).second)
            fail(where + " \"" + cls.name + "\": duplicate class name");
        std::set<CycleType> seen;
        for (std::size_t t = 0; t < jc["types"].size(); ++t) {
            const auto& jt = jc["types"][t];
            const std::string at = where + " \"" + cls.name + "\" type[" + std::to_string(t) + "]";
            if (!jt.is_array() || jt.empty())
                fail(at + ": expected a nonempty array of parts");
            std::vector<int> parts;
            for (const auto& p : jt) {
                if (!p.is_number_integer() || p.get<int>() < 1)
                    fail(at + ": parts must be positive integers");
                parts.push_back(p.get<int>());
            }
            if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
                fail(at + ": parts must be nonincreasing");
            CycleType ct = CycleType::from_parts(parts);
            if (ct.n() != data.n)
                fail(at + " " + ct.to_string() + ": sums to " + std::to_string(ct.n()) + ", expected " +
                     std::to_string(data.n));
            if (data.flavor == Flavor::A && !is_even(ct))
                fail(at + " " + ct.to_string() + ": odd permutation type in an A-group file");
            if (seen.insert(ct).second)
                cls.covered.push_back(std::move(ct));
        }
        data.classes.push_back(std::move(cls));
    }
    return data;
}

PrimitiveData load_primitive_data(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw LoadError(path.string() + ": cannot open");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw LoadError(path.string() + ": " + e.what());
    }
    return parse_primitive_data(j, path.string());
}

nlohmann::json to_json(const PrimitiveData& data) {
    nlohmann::json j;
    j["n"] = data.n;
    j["group"] = to_string(data.flavor);
    j["classes"] = nlohmann::json::array();
    for (const auto& cls : data.classes) {
        nlohmann::json types = nlohmann::json::array();
        for (const auto& t : cls.covered)
            types.push_back(t.parts());
        j["classes"].push_back({{"name", cls.name}, {"types", types}});
    }
    return j;
}

std::vector<PrimitiveData> load_primitive_dir(const std::filesystem::path& dir, int n, Flavor flavor) {
    if (!std::filesystem::is_directory(dir))
        throw LoadError(dir.string() + ": not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<PrimitiveData> out;
    for (const auto& f : files) {
        PrimitiveData d = load_primitive_data(f);
        if (d.n == n && d.flavor == flavor)
            out.push_back(std::move(d));
    }
    return out;
}

std::vector<SubgroupClass> build_universe(int n, Flavor flavor, const UniverseOptions& options) {
    if (flavor == Flavor::S && n < 3)
        throw InputError("S_n universe needs n >= 3");
    if (flavor == Flavor::A && n < 4)
        throw InputError("A_n universe needs n >= 4");
    std::vector<SubgroupClass> out;
    for (int x = 1; 2 * x < n; ++x)
        out.push_back(SubgroupClass(Intransitive{x}));
    for (int b = 2; 2 * b <= n; ++b)
        if (n % b == 0)
            out.push_back(SubgroupClass(Imprimitive{b, n / b}));
    if (flavor == Flavor::S)
        out.push_back(SubgroupClass(Alternating{}));

    std::vector<PrimitiveExternal> prim;
    for (const auto& data : options.primitive) {
        if (data.n != n || data.flavor != flavor)
            throw LoadError(data.source + ": primitive data is for " + to_string(data.flavor) + "_" +
                            std::to_string(data.n) + ", instance is " + to_string(flavor) + "_" +
                            std::to_string(n));
        for (const auto& cls : data.classes) {
            for (const auto& p : prim)
                if (p.name == cls.name)
                    throw LoadError(data.source + ": class \"" + cls.name + "\" supplied twice");
            prim.push_back(cls);
        }
    }
    std::sort(prim.begin(), prim.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (auto& p : prim)
        out.push_back(SubgroupClass(std::move(p)));
    return out;
}

PMinPredicate::PMinPredicate(Int n) : n_(n) {
    const Factorization f = factorize(n);
    if (f.r() < 2)
        throw DomainError("P_min is undefined for the prime power n=" + std::to_string(n));
    p1p2_ = f.prime(1) * f.prime(2);
}

PMinPredicate p_min_predicate(Int n) { return PMinPredicate(n); }

std::vector<int> p_min_set(int n) {
    const PMinPredicate pred(n);
    std::vector<int> out;
    for (int x = 1; 2 * x < n; ++x)
        if (pred(x))
            out.push_back(x);
    return out;
}

std::optional<std::size_t> MembershipMatrix::class_index(const SubgroupClass& cls) const {
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (classes_[c] == cls)
            return c;
        // external classes are identified by name
        const auto* a = classes_[c].get_if<PrimitiveExternal>();
        const auto* b = cls.get_if<PrimitiveExternal>();
        if (a && b && a->name == b->name)
            return c;
    }
    return std::nullopt;
}

bool MembershipMatrix::conditional() const noexcept {
    return std::none_of(classes_.begin(), classes_.end(),
                        [](const SubgroupClass& c) { return c.get_if<PrimitiveExternal>() != nullptr; });
}

namespace {

void fill_range(const TypeIndex& types, const std::vector<SubgroupClass>& classes, std::vector<Bitset>& rows,
                std::size_t begin, std::size_t end) {
    const int n = types.n();
    const int half = (n - 1) / 2; // largest x with x < n/2
    std::vector<int> parts;
    std::vector<char> reach(static_cast<std::size_t>(half) + 1);
    for (std::size_t t = begin; t < end; ++t) {
        auto raw = types.parts(t);
        parts.assign(raw.begin(), raw.end());

        std::fill(reach.begin(), reach.end(), 0);
        reach[0] = 1;
        for (int p : parts)
            for (int s = half; s >= p; --s)
                if (reach[static_cast<std::size_t>(s - p)])
                    reach[static_cast<std::size_t>(s)] = 1;
        const bool even = is_even(parts);

        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto& v = classes[c].value();
            bool hit = false;
            if (const auto* in = std::get_if<Intransitive>(&v))
                hit = reach[static_cast<std::size_t>(in->x)] != 0;
            else if (const auto* im = std::get_if<Imprimitive>(&v))
                hit = in_imprimitive(parts, im->b);
            else if (std::holds_alternative<Alternating>(v))
                hit = even;
            else
                continue; // external rows come from data
            if (hit)
                rows[c].set(t);
        }
    }
}

} // namespace

MembershipMatrix build_matrix(std::vector<SubgroupClass> universe, std::shared_ptr<const TypeIndex> types,
                              Flavor flavor, int threads) {
    if (!types)
        throw InputError("build_matrix: no type index");
    const bool want_even = flavor == Flavor::A;
    if ((types->filter() == TypeFilter::Even) != want_even)
        throw InputError("build_matrix: flavor " + to_string(flavor) +
                         " needs the " + (want_even ? "even" : "full") + " type index");
    const int n = types->n();
    for (const auto& cls : universe) {
        if (const auto* in = cls.get_if<Intransitive>(); in && (in->x < 1 || 2 * in->x >= n))
            throw InputError("build_matrix: " + cls.label() + " out of range for n=" + std::to_string(n));
        if (const auto* im = cls.get_if<Imprimitive>(); im && im->b * im->m != n)
            throw InputError("build_matrix: " + cls.label() + " does not match n=" + std::to_string(n));
        if (cls.get_if<Alternating>() && flavor == Flavor::A)
            throw InputError("build_matrix: A_n is not a proper subgroup of itself");
    }

    MembershipMatrix mm;
    mm.flavor_ = flavor;
    mm.types_ = types;
    mm.classes_ = std::move(universe);
    mm.rows_.assign(mm.classes_.size(), Bitset(types->size()));

    const std::size_t total = types->size();
    const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    // chunks are multiples of 64 so no two workers touch the same word
    const std::size_t chunk = std::max<std::size_t>(64, ((total / (workers * 8) + 63) / 64) * 64);
    if (workers == 1) {
        fill_range(*types, mm.classes_, mm.rows_, 0, total);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t begin = next.fetch_add(chunk);
                    if (begin >= total)
                        return;
                    fill_range(*types, mm.classes_, mm.rows_, begin, std::min(total, begin + chunk));
                }
            });
        for (auto& th : pool)
            th.join();
    }

    for (std::size_t c = 0; c < mm.classes_.size(); ++c) {
        const auto* ext = mm.classes_[c].get_if<PrimitiveExternal>();
        if (!ext)
            continue;
        for (const auto& t : ext->covered) {
            auto idx = types->find(t);
            if (!idx)
                throw LoadError("class " + ext->name + ": type " + t.to_string() + " is not a type of " +
                                to_string(flavor) + "_" + std::to_string(n));
            mm.rows_[c].set(*idx);
        }
    }
    return mm;
}

MembershipMatrix build_instance(int n, Flavor flavor, const UniverseOptions& options, int threads, int cap) {
    auto universe = build_universe(n, flavor, options);
    auto types = std::make_shared<const TypeIndex>(
        enumerate_types(n, flavor == Flavor::A ? TypeFilter::Even : TypeFilter::All, cap));
    return build_matrix(std::move(universe), std::move(types), flavor, threads);
}

} // namespace ncover
