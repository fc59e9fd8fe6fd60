// ncover: normal coverings of S_n and A_n by maximal subgroup classes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncover/arith.hpp"
#include "ncover/error.hpp"
#include "ncover/harness.hpp"
#include "ncover/membership.hpp"
#include "ncover/permgroup.hpp"
#include "ncover/solver.hpp"
#include "ncover/universe.hpp"

using namespace ncover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw InputError("range must look like A..B: " + s);
    try {
        std::size_t used = 0;
        const int a = std::stoi(s.substr(0, dots), &used);
        if (used != dots)
            throw InputError("bad range: " + s);
        const std::string rest = s.substr(dots + 2);
        const int b = std::stoi(rest, &used);
        if (used != rest.size())
            throw InputError("bad range: " + s);
        if (a > b)
            throw InputError("empty range: " + s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw InputError("bad range: " + s);
    }
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) {
            try {
                out.push_back(std::stoi(item));
            } catch (const std::logic_error&) {
                throw InputError("bad index list: " + s);
            }
        }
    return out;
}

std::vector<Flavor> parse_groups(const std::string& s) {
    std::vector<Flavor> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(parse_flavor(item));
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os)
        throw InputError("cannot write " + path);
    os << text;
}

std::string join_labels(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

// --- counts ---------------------------------------------------------------

struct CountsArgs {
    Int n = 0;
    std::optional<Int> gcd;
    std::string I, J;
};

int run_counts(const CountsArgs& a) {
    const Factorization f = factorize(a.n);
    if (a.gcd) {
        auto xs = gcd_class_indices(f, *a.gcd);
        std::cout << "n=" << a.n << " gcd=" << *a.gcd << " count=" << xs.size() << "\nx:";
        for (Int x : xs)
            std::cout << ' ' << x;
        std::cout << '\n';
        return kExitOk;
    }
    IndexSpec spec{parse_index_list(a.I), parse_index_list(a.J)};
    std::cout << "n=" << a.n << " r=" << f.r() << " full=" << count_full(f, spec)
              << " half_open=" << count_half_open(f, spec) << '\n';
    return kExitOk;
}

// --- gfun -----------------------------------------------------------------

int run_gfun(const std::string& range) {
    auto [a, b] = parse_range(range);
    if (a < 2)
        throw InputError("gfun needs n >= 2");
    std::cout << "n,g\n";
    for (int n = a; n <= b; ++n) {
        const Factorization f = factorize(n);
        std::cout << n << ',' << (f.r() >= 2 ? std::to_string(g_value(f)) : "NA") << '\n';
    }
    return kExitOk;
}

// --- member ---------------------------------------------------------------

int run_member(int n, const std::string& type_text, const std::string& class_text) {
    const CycleType t = CycleType::parse(type_text, n);
    const SubgroupClass cls = SubgroupClass::parse(class_text, n);
    bool in = false;
    std::string witness;
    if (const auto* x = cls.get_if<Intransitive>()) {
        in = in_intransitive(t, x->x);
    } else if (const auto* w = cls.get_if<Imprimitive>()) {
        auto g = imprimitive_witness(t, w->b);
        in = g.has_value();
        if (g)
            witness = g->to_string();
    } else if (cls.get_if<Alternating>()) {
        in = in_alternating(t);
    } else {
        throw InputError("member: only P:x, W:bxm and A classes are built in");
    }
    std::cout << t.to_string() << (in ? " in " : " not in ") << cls.label() << '\n';
    if (!witness.empty())
        std::cout << "witness: " << witness << '\n';
    return kExitOk;
}

// --- gamma ----------------------------------------------------------------

struct GammaArgs {
    int n = 0;
    std::string group = "S";
    std::vector<std::string> primitive;
    bool enumerate_all = false;
    int threads = 1;
    std::string format = "text";
    double time_limit = 0;
    std::size_t max_covers = 100000;
    int cap = kDefaultTypeCap;
};

int run_gamma(const GammaArgs& a) {
    const Flavor flavor = parse_flavor(a.group);
    UniverseOptions uo;
    for (const auto& p : a.primitive) {
        if (std::filesystem::is_directory(p)) {
            for (auto& d : load_primitive_dir(p, a.n, flavor))
                uo.primitive.push_back(std::move(d));
        } else {
            uo.primitive.push_back(load_primitive_data(p));
        }
    }
    const auto mm = build_instance(a.n, flavor, uo, a.threads, a.cap);
    SolveOptions so;
    so.enumerate_all = a.enumerate_all;
    so.threads = a.threads;
    so.time_limit_seconds = a.time_limit;
    so.max_covers = a.max_covers;
    CoverResult res = min_cover(mm, so);

    const Factorization f = factorize(a.n);
    std::optional<Int> g;
    if (f.r() >= 2)
        g = g_value(f);

    std::optional<StructureReport> sr;
    if (f.r() >= 2) {
        CoverResult probe = res;
        if (!probe.all_minimum_covers)
            probe.all_minimum_covers = std::vector<std::vector<std::size_t>>{res.canonical_cover};
        sr = analyze_min_covers(probe, mm);
    }
    std::vector<std::string> labels;
    for (const auto& c : res.canonical_classes)
        labels.push_back(c.label());

    if (a.format == "json") {
        nlohmann::json j;
        j["n"] = a.n;
        j["group"] = to_string(flavor);
        j["g"] = g ? nlohmann::json(*g) : nlohmann::json();
        j["gamma_modeled"] = res.minimum_size;
        j["conditional"] = res.conditional;
        j["timed_out"] = res.timed_out;
        j["canonical_cover"] = labels;
        j["num_min_covers"] = res.all_minimum_covers ? nlohmann::json(res.all_minimum_covers->size()) : nlohmann::json();
        j["truncated"] = res.truncated;
        if (sr)
            j["p_min_match"] = {{"p_min", sr->p_min},
                                {"covers_checked", sr->covers.size()},
                                {"agree", sr->agree},
                                {"disagree", sr->disagree},
                                {"truncated", sr->truncated}};
        else
            j["p_min_match"] = nullptr;
        j["stats"] = {{"nodes", res.stats.nodes},
                      {"types_total", res.stats.types_total},
                      {"distinct_columns", res.stats.distinct_columns},
                      {"types_reduced", res.stats.types_reduced},
                      {"classes_total", res.stats.classes_total},
                      {"classes_reduced", res.stats.classes_reduced},
                      {"greedy_size", res.stats.greedy_size},
                      {"wall_seconds", res.stats.wall_seconds}};
        std::cout << j.dump(2) << '\n';
    } else if (a.format == "csv") {
        std::cout << "n,group,g,gamma_modeled,conditional,canonical_cover,num_min_covers\n";
        std::cout << a.n << ',' << to_string(flavor) << ',' << (g ? std::to_string(*g) : "NA") << ','
                  << res.minimum_size << ',' << (res.conditional ? "true" : "false") << ','
                  << join_labels(labels, ";") << ','
                  << (res.all_minimum_covers ? std::to_string(res.all_minimum_covers->size()) : "") << '\n';
    } else if (a.format == "text") {
        std::cout << to_string(flavor) << "_" << a.n << ": modeled gamma = " << res.minimum_size
                  << (res.timed_out ? " (time limit hit, upper bound only)" : "") << '\n';
        std::cout << "g(n) = " << (g ? std::to_string(*g) : "NA") << '\n';
        std::cout << "conditional: " << (res.conditional ? "yes (no primitive data)" : "no") << '\n';
        std::cout << "cover: " << join_labels(labels, " ") << '\n';
        if (res.all_minimum_covers)
            std::cout << "minimum covers: " << res.all_minimum_covers->size() << (res.truncated ? " (truncated)" : "")
                      << '\n';
        if (sr)
            std::cout << "P_min shape: " << sr->agree << " agree, " << sr->disagree << " disagree\n";
        std::cout << "types " << res.stats.types_total << " -> " << res.stats.types_reduced << ", classes "
                  << res.stats.classes_total << " -> " << res.stats.classes_reduced << ", nodes " << res.stats.nodes
                  << ", " << res.stats.wall_seconds << " s\n";
    } else {
        throw InputError("unknown format " + a.format);
    }
    return res.timed_out ? kExitFailed : kExitOk;
}

// --- verify-conjectures ----------------------------------------------------

struct VerifyArgs {
    std::string range;
    std::string groups = "S,A";
    std::string primitive_dir;
    std::string out;
    std::string csv;
    int threads = 1;
    double time_limit = 0;
    int cap = kDefaultTypeCap;
    bool no_stats = false;
};

int run_verify(const VerifyArgs& a) {
    VerifyOptions o;
    std::tie(o.from, o.to) = parse_range(a.range);
    o.flavors = parse_groups(a.groups);
    if (!a.primitive_dir.empty())
        o.primitive_dir = a.primitive_dir;
    o.threads = a.threads;
    o.time_limit_seconds = a.time_limit;
    o.cap = a.cap;
    auto rep = verify_conjectures(o);
    const std::string json = to_json(rep, !a.no_stats).dump(2) + "\n";
    if (a.out.empty())
        std::cout << json;
    else
        write_file(a.out, json);
    if (!a.csv.empty())
        write_file(a.csv, to_csv(rep));
    bool bad = false;
    for (const auto& e : rep.entries) {
        if (e.status == "timeout")
            bad = true;
        if (!a.out.empty())
            std::cout << to_string(e.flavor) << "_" << e.n << ": " << e.status
                      << (e.gamma_modeled ? " gamma=" + std::to_string(*e.gamma_modeled) : "") << " known "
                      << e.known.describe() << " -> " << e.verdict << '\n';
    }
    return bad ? kExitFailed : kExitOk;
}

// --- fixtures ---------------------------------------------------------------

int run_fixtures(const std::string& family, Int q, const std::string& format) {
    FixtureReport r;
    if (family == "15q" || family == "1.3a")
        r = family_15q_fixtures(q);
    else if (family == "6q" || family == "1.3b")
        r = family_6q_fixtures(q);
    else if (family == "examples")
        r = example_fixtures(q);
    else
        throw InputError("unknown fixture family " + family + " (15q, 6q, examples)");
    if (format == "json")
        std::cout << to_json(r).dump(2) << '\n';
    else
        std::cout << to_text(r);
    return r.passed() ? kExitOk : kExitFailed;
}

// --- generate-m12 -------------------------------------------------------------

int run_generate_m12(const std::string& out) {
    auto gen = generate_m12();
    const std::string json = to_json(gen.data).dump() + "\n";
    if (out.empty())
        std::cout << json;
    else
        write_file(out, json);
    std::cerr << "order " << gen.order << ", " << gen.data.classes.front().covered.size() << " types";
    if (!gen.one_half_only.empty()) {
        std::cerr << "; left out (one A_12 half only):";
        for (const auto& t : gen.one_half_only)
            std::cerr << ' ' << t.to_string();
    }
    std::cerr << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal coverings of symmetric and alternating groups"};
    app.require_subcommand(1);

    CountsArgs counts;
    auto* c_counts = app.add_subcommand("counts", "size of P_I^J or of a gcd class");
    c_counts->add_option("--n", counts.n, "degree")->required();
    c_counts->add_option("--gcd", counts.gcd, "list x < n/2 with gcd(x,n) = D");
    c_counts->add_option("--I", counts.I, "indices i with p_i | x, e.g. 1,2");
    c_counts->add_option("--J", counts.J, "indices j with p_j not dividing x");

    std::string gfun_range;
    auto* c_gfun = app.add_subcommand("gfun", "g(n) as CSV");
    c_gfun->add_option("--range", gfun_range, "A..B")->required();

    int m_n = 0;
    std::string m_type, m_class;
    auto* c_member = app.add_subcommand("member", "is a cycle type in a subgroup class");
    c_member->add_option("--n", m_n, "degree")->required();
    c_member->add_option("--type", m_type, "parts, e.g. 7,3,2")->required();
    c_member->add_option("--class", m_class, "P:x, W:bxm or A")->required();

    GammaArgs gamma;
    auto* c_gamma = app.add_subcommand("gamma", "exact minimum cover over the modeled universe");
    c_gamma->add_option("--n", gamma.n, "degree")->required();
    c_gamma->add_option("--group", gamma.group, "S or A")->required()->check(CLI::IsMember({"S", "A"}));
    c_gamma->add_option("--primitive-data", gamma.primitive, "JSON file or directory (repeatable)");
    c_gamma->add_flag("--enumerate-all-min", gamma.enumerate_all, "list every minimum cover");
    c_gamma->add_option("--threads", gamma.threads, "worker threads");
    c_gamma->add_option("--format", gamma.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    c_gamma->add_option("--time-limit", gamma.time_limit, "seconds, 0 = none");
    c_gamma->add_option("--max-covers", gamma.max_covers, "cap for --enumerate-all-min");
    c_gamma->add_option("--cap", gamma.cap, "largest n for full type enumeration");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify-conjectures", "batch comparison with known values");
    c_verify->add_option("--range", verify.range, "A..B")->required();
    c_verify->add_option("--group", verify.groups, "S, A or S,A");
    c_verify->add_option("--primitive-data", verify.primitive_dir, "directory of primitive data files");
    c_verify->add_option("--out", verify.out, "JSON report path (stdout when empty)");
    c_verify->add_option("--csv", verify.csv, "CSV table path");
    c_verify->add_option("--threads", verify.threads, "instances solved in parallel");
    c_verify->add_option("--time-limit", verify.time_limit, "seconds per instance, 0 = none");
    c_verify->add_option("--cap", verify.cap, "largest n for full type enumeration");
    c_verify->add_flag("--no-stats", verify.no_stats, "leave timing and node counts out of the JSON");

    std::string fx_family;
    Int fx_q = 0;
    std::string fx_format = "text";
    auto* c_fix = app.add_subcommand("fixtures", "checks for the n = 15q and n = 6q lower-bound arguments");
    c_fix->add_option("--family,--theorem", fx_family, "15q, 6q or examples")->required();
    c_fix->add_option("--q", fx_q, "the prime q")->required();
    c_fix->add_option("--format", fx_format, "text or json")->check(CLI::IsMember({"json", "text"}));

    std::string m12_out;
    auto* c_m12 = app.add_subcommand("generate-m12", "primitive data file for M12 < A12");
    c_m12->add_option("--out", m12_out, "output path (stdout when empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*c_counts)
            return run_counts(counts);
        if (*c_gfun)
            return run_gfun(gfun_range);
        if (*c_member)
            return run_member(m_n, m_type, m_class);
        if (*c_gamma)
            return run_gamma(gamma);
        if (*c_verify)
            return run_verify(verify);
        if (*c_fix)
            return run_fixtures(fx_family, fx_q, fx_format);
        if (*c_m12)
            return run_generate_m12(m12_out);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitFailed;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const LoadError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
