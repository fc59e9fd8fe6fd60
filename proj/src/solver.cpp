#include "ncover/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "ncover/arith.hpp"
#include "ncover/error.hpp"

namespace ncover {

std::vector<SubgroupClass> build_standard_cover(int n, Flavor flavor) {
    const Factorization f = factorize(n);
    if (f.r() < 2)
        throw DomainError("the g(n) cover needs two distinct primes; n=" + std::to_string(n) + " is a prime power");
    if (flavor == Flavor::A && n < 4)
        throw InputError("A_n needs n >= 4");
    std::vector<SubgroupClass> cover;
    for (int x : p_min_set(n))
        cover.push_back(SubgroupClass(Intransitive{x}));
    for (int i = 1; i <= 2; ++i) {
        const int p = static_cast<int>(f.prime(i));
        cover.push_back(SubgroupClass(Imprimitive{p, n / p}));
    }
    return cover;
}

std::vector<std::size_t> verify_cover_indices(const MembershipMatrix& matrix, std::span<const std::size_t> cover) {
    Bitset covered(matrix.type_count());
    for (std::size_t c : cover) {
        if (c >= matrix.class_count())
            throw InputError("verify_cover: class index out of range");
        covered |= matrix.row(c);
    }
    std::vector<std::size_t> missing;
    for (std::size_t t = 0; t < matrix.type_count(); ++t)
        if (!covered.test(t))
            missing.push_back(t);
    return missing;
}

std::vector<std::size_t> verify_cover(const MembershipMatrix& matrix, std::span<const SubgroupClass> cover) {
    std::vector<std::size_t> idx;
    for (const auto& cls : cover) {
        auto c = matrix.class_index(cls);
        if (!c)
            throw InputError("verify_cover: " + cls.label() + " is not in the universe");
        idx.push_back(*c);
    }
    return verify_cover_indices(matrix, idx);
}

namespace {

using Clock = std::chrono::steady_clock;

/// The problem after merging equal columns, dropping dominated types and
/// merging classes that agree on what is left.
struct Reduced {
    std::size_t elements = 0;
    std::size_t reps = 0;
    std::vector<Bitset> cover;                     // rep class -> elements
    std::vector<Bitset> options;                   // element -> rep classes
    std::vector<std::vector<std::size_t>> members; // rep class -> original class indices
};

Reduced reduce(const MembershipMatrix& mm, SolveStats& stats) {
    const std::size_t T = mm.type_count();
    const std::size_t C = mm.class_count();
    const std::size_t W = std::max<std::size_t>(1, (C + 63) / 64);
    stats.types_total = T;
    stats.classes_total = C;

    std::vector<std::uint64_t> cols(T * W, 0);
    for (std::size_t c = 0; c < C; ++c)
        mm.row(c).for_each([&](std::size_t t) { cols[t * W + c / 64] |= std::uint64_t{1} << (c % 64); });

    for (std::size_t t = 0; t < T; ++t) {
        bool empty = true;
        for (std::size_t w = 0; w < W && empty; ++w)
            empty = cols[t * W + w] == 0;
        if (empty)
            throw InfeasibleError("no class of the universe contains type " + mm.types().label(t) + " (" +
                                      to_string(mm.flavor()) + "_" + std::to_string(mm.n()) + ")",
                                  mm.types().label(t));
    }

    auto col = [&](std::size_t t) { return cols.begin() + static_cast<std::ptrdiff_t>(t * W); };
    std::vector<std::size_t> order(T);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int cmp = 0;
        for (std::size_t w = 0; w < W && cmp == 0; ++w)
            cmp = cols[a * W + w] < cols[b * W + w] ? -1 : (cols[a * W + w] > cols[b * W + w] ? 1 : 0);
        return cmp != 0 ? cmp < 0 : a < b;
    });
    // first index of each run is the lowest type index carrying that column
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < T; ++i)
        if (i == 0 || !std::equal(col(order[i]), col(order[i]) + static_cast<std::ptrdiff_t>(W), col(order[i - 1])))
            distinct.push_back(order[i]);
    stats.distinct_columns = distinct.size();

    auto popcount = [&](std::size_t t) {
        int p = 0;
        for (std::size_t w = 0; w < W; ++w)
            p += std::popcount(cols[t * W + w]);
        return p;
    };
    std::vector<std::pair<int, std::size_t>> by_size;
    by_size.reserve(distinct.size());
    for (std::size_t t : distinct)
        by_size.emplace_back(popcount(t), t);
    std::sort(by_size.begin(), by_size.end());

    // a type whose covering set contains another type's covering set is
    // covered whenever that other type is
    std::vector<std::size_t> kept;
    for (const auto& [size, t] : by_size) {
        bool dominated = false;
        for (std::size_t u : kept) {
            bool subset = true;
            for (std::size_t w = 0; w < W && subset; ++w)
                subset = (cols[u * W + w] & ~cols[t * W + w]) == 0;
            if (subset) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(t);
    }
    std::sort(kept.begin(), kept.end()); // element order = lowest type index
    stats.types_reduced = kept.size();

    Reduced r;
    r.elements = kept.size();
    std::vector<Bitset> class_rows(C, Bitset(r.elements));
    for (std::size_t e = 0; e < kept.size(); ++e)
        for (std::size_t c = 0; c < C; ++c)
            if ((cols[kept[e] * W + c / 64] >> (c % 64)) & 1U)
                class_rows[c].set(e);
    for (std::size_t c = 0; c < C; ++c) {
        if (class_rows[c].none())
            continue;
        bool merged = false;
        for (std::size_t k = 0; k < r.cover.size(); ++k)
            if (r.cover[k] == class_rows[c]) {
                r.members[k].push_back(c);
                merged = true;
                break;
            }
        if (!merged) {
            r.cover.push_back(class_rows[c]);
            r.members.push_back({c});
        }
    }
    r.reps = r.cover.size();
    stats.classes_reduced = r.reps;
    r.options.assign(r.elements, Bitset(r.reps));
    for (std::size_t k = 0; k < r.reps; ++k)
        r.cover[k].for_each([&](std::size_t e) { r.options[e].set(k); });
    return r;
}

enum class Mode { Optimize, Decide, Enumerate };

struct Shared {
    std::atomic<std::size_t> best{0};
    std::atomic<bool> timed_out{false};
    std::atomic<bool> found{false};
    std::mutex mutex;
    std::vector<std::size_t> best_cover;
    std::optional<Clock::time_point> deadline;
};

/// Depth-first branch and bound.  Branches on the uncovered element with
/// the fewest admissible classes (ties: lowest index), trying classes in
/// index order and excluding earlier siblings from later branches, so every
/// cover is generated at most once.
class Search {
public:
    Search(const Reduced& r, Mode mode, Shared& shared, std::size_t budget, std::size_t cap = 0)
        : r_(r), mode_(mode), shared_(shared), budget_(budget), cap_(cap) {}

    void run(Bitset uncovered, Bitset allowed, std::vector<std::size_t> chosen) {
        chosen_ = std::move(chosen);
        dfs(uncovered, allowed);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    std::vector<std::vector<std::size_t>>& covers() noexcept { return covers_; }
    bool capped() const noexcept { return capped_; }

    /// Branch element at the given state, or nullopt when some uncovered
    /// element has no admissible class left.
    std::optional<std::size_t> branch_element(const Bitset& uncovered, const Bitset& allowed) const {
        std::size_t best_e = r_.elements, best_count = r_.reps + 1;
        bool dead = false;
        uncovered.for_each([&](std::size_t e) {
            if (dead)
                return;
            Bitset o = r_.options[e];
            o &= allowed;
            const std::size_t cnt = o.count();
            if (cnt == 0)
                dead = true;
            else if (cnt < best_count) {
                best_count = cnt;
                best_e = e;
            }
        });
        if (dead)
            return std::nullopt;
        return best_e;
    }

private:
    bool stopped() {
        if (shared_.timed_out.load(std::memory_order_relaxed))
            return true;
        if (mode_ == Mode::Decide && shared_.found.load(std::memory_order_relaxed))
            return true;
        if (capped_)
            return true;
        if (shared_.deadline && (nodes_ & 255) == 1 && Clock::now() > *shared_.deadline) {
            shared_.timed_out = true;
            return true;
        }
        return false;
    }

    /// Greedy packing of uncovered elements with pairwise disjoint class
    /// sets; each needs its own class.
    std::size_t packing_bound(const Bitset& uncovered, const Bitset& allowed) const {
        std::vector<std::pair<std::size_t, std::size_t>> items;
        uncovered.for_each([&](std::size_t e) {
            Bitset o = r_.options[e];
            o &= allowed;
            items.emplace_back(o.count(), e);
        });
        std::sort(items.begin(), items.end());
        Bitset used(r_.reps);
        std::size_t lb = 0;
        for (const auto& [cnt, e] : items) {
            Bitset o = r_.options[e];
            o &= allowed;
            if (!o.intersects(used)) {
                used |= o;
                ++lb;
            }
        }
        return lb;
    }

    std::size_t limit() const {
        // largest admissible total size of a cover in this branch
        if (mode_ == Mode::Optimize)
            return shared_.best.load(std::memory_order_relaxed) - 1;
        return budget_;
    }

    void record() {
        if (mode_ == Mode::Optimize) {
            std::lock_guard lock(shared_.mutex);
            if (chosen_.size() < shared_.best.load()) {
                shared_.best = chosen_.size();
                shared_.best_cover = chosen_;
            }
        } else if (mode_ == Mode::Decide) {
            std::lock_guard lock(shared_.mutex);
            if (!shared_.found) {
                shared_.found = true;
                shared_.best_cover = chosen_;
            }
        } else {
            auto c = chosen_;
            std::sort(c.begin(), c.end());
            covers_.push_back(std::move(c));
            if (cap_ && covers_.size() >= cap_)
                capped_ = true;
        }
    }

    void dfs(Bitset& uncovered, Bitset& allowed) {
        ++nodes_;
        if (stopped())
            return;
        if (uncovered.none()) {
            if (chosen_.size() <= limit())
                record();
            return;
        }
        if (chosen_.size() + 1 > limit())
            return;
        auto e = branch_element(uncovered, allowed);
        if (!e)
            return;
        if (chosen_.size() + packing_bound(uncovered, allowed) > limit())
            return;

        Bitset cand = r_.options[*e];
        cand &= allowed;
        Bitset local_allowed = allowed;
        cand.for_each([&](std::size_t k) {
            if (stopped())
                return;
            Bitset next_uncovered = uncovered;
            next_uncovered.subtract(r_.cover[k]);
            local_allowed.reset(k);
            chosen_.push_back(k);
            dfs(next_uncovered, local_allowed);
            chosen_.pop_back();
        });
    }

    const Reduced& r_;
    Mode mode_;
    Shared& shared_;
    std::size_t budget_;
    std::size_t cap_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<std::size_t>> covers_;
    std::uint64_t nodes_ = 0;
    bool capped_ = false;
};

Bitset all_bits(std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
        b.set(i);
    return b;
}

/// Root branching tasks: one per admissible class of the root branch element,
/// each with its earlier siblings excluded.
struct Task {
    Bitset uncovered;
    Bitset allowed;
    std::vector<std::size_t> chosen;
};

std::vector<Task> root_tasks(const Reduced& r, const Bitset& uncovered, const Bitset& allowed,
                             const std::vector<std::size_t>& chosen, Shared& shared) {
    Search probe(r, Mode::Decide, shared, 0);
    auto e = probe.branch_element(uncovered, allowed);
    std::vector<Task> tasks;
    if (!e)
        return tasks;
    Bitset cand = r.options[*e];
    cand &= allowed;
    Bitset local_allowed = allowed;
    cand.for_each([&](std::size_t k) {
        local_allowed.reset(k);
        Task t{uncovered, local_allowed, chosen};
        t.uncovered.subtract(r.cover[k]);
        t.chosen.push_back(k);
        tasks.push_back(std::move(t));
    });
    return tasks;
}

template <class Fn>
void run_tasks(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, threads)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

std::vector<std::size_t> greedy(const Reduced& r) {
    Bitset uncovered = all_bits(r.elements);
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
        std::size_t best_k = 0, best_gain = 0;
        for (std::size_t k = 0; k < r.reps; ++k) {
            Bitset g = r.cover[k];
            g &= uncovered;
            const std::size_t gain = g.count();
            if (gain > best_gain) {
                best_gain = gain;
                best_k = k;
            }
        }
        chosen.push_back(best_k);
        uncovered.subtract(r.cover[best_k]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

CoverResult min_cover(const MembershipMatrix& matrix, const SolveOptions& options) {
    const auto start = Clock::now();
    CoverResult res;
    res.n = matrix.n();
    res.flavor = matrix.flavor();
    res.conditional = matrix.conditional();

    if (matrix.class_count() == 0)
        throw InfeasibleError("empty universe", matrix.type_count() ? matrix.types().label(0) : "");
    Reduced r = reduce(matrix, res.stats);

    Shared shared;
    if (options.time_limit_seconds > 0)
        shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(options.time_limit_seconds));
    std::atomic<std::uint64_t> nodes{0};

    const Bitset everything = all_bits(r.elements);
    const Bitset all_reps = all_bits(r.reps);

    // upper bound, then improve it
    auto g = greedy(r);
    res.stats.greedy_size = g.size();
    shared.best = g.size();
    shared.best_cover = g;
    if (shared.deadline && Clock::now() > *shared.deadline)
        shared.timed_out = true;
    if (!shared.timed_out) {
        auto tasks = root_tasks(r, everything, all_reps, {}, shared);
        run_tasks(tasks.size(), options.threads, [&](std::size_t i) {
            Search s(r, Mode::Optimize, shared, 0);
            s.run(tasks[i].uncovered, tasks[i].allowed, tasks[i].chosen);
            nodes += s.nodes();
        });
    }
    const std::size_t k = shared.best.load();
    res.minimum_size = k;

    auto finish = [&](std::vector<std::size_t> reps_cover) {
        res.canonical_cover.clear();
        for (std::size_t rep : reps_cover)
            res.canonical_cover.push_back(r.members[rep].front());
        std::sort(res.canonical_cover.begin(), res.canonical_cover.end());
        res.canonical_classes.clear();
        for (std::size_t c : res.canonical_cover)
            res.canonical_classes.push_back(matrix.classes()[c]);
        res.stats.nodes = nodes.load();
        res.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    };
    if (shared.timed_out) {
        res.timed_out = true;
        finish(shared.best_cover);
        return res;
    }

    // lexicographically least cover of size k; reps are ordered by their
    // smallest original class index, so rep order equals class order
    std::vector<std::size_t> lex;
    std::size_t last = 0;
    for (std::size_t pos = 0; pos < k; ++pos) {
        bool placed = false;
        for (std::size_t c = pos == 0 ? 0 : last + 1; c < r.reps && !placed; ++c) {
            Bitset uncovered = everything;
            for (std::size_t chosen : lex)
                uncovered.subtract(r.cover[chosen]);
            uncovered.subtract(r.cover[c]);
            Bitset allowed(r.reps);
            for (std::size_t j = c + 1; j < r.reps; ++j)
                allowed.set(j);
            shared.found = false;
            Search s(r, Mode::Decide, shared, k - pos - 1);
            s.run(uncovered, allowed, {});
            nodes += s.nodes();
            if (shared.timed_out)
                break;
            if (shared.found) {
                lex.push_back(c);
                last = c;
                placed = true;
            }
        }
        if (shared.timed_out)
            break;
    }
    if (shared.timed_out) {
        res.timed_out = true;
        finish(shared.best_cover);
        return res;
    }
    finish(lex);

    if (options.enumerate_all) {
        auto tasks = root_tasks(r, everything, all_reps, {}, shared);
        std::vector<std::vector<std::vector<std::size_t>>> per_task(tasks.size());
        std::vector<char> capped(tasks.size(), 0);
        run_tasks(tasks.size(), options.threads, [&](std::size_t i) {
            Search s(r, Mode::Enumerate, shared, k, options.max_covers);
            s.run(tasks[i].uncovered, tasks[i].allowed, tasks[i].chosen);
            nodes += s.nodes();
            per_task[i] = std::move(s.covers());
            capped[i] = s.capped();
        });
        std::vector<std::vector<std::size_t>> all;
        bool truncated = std::any_of(capped.begin(), capped.end(), [](char c) { return c != 0; });
        for (const auto& covers : per_task) {
            for (const auto& rc : covers) {
                // expand merged classes
                std::vector<std::size_t> pick(rc.size(), 0);
                for (;;) {
                    if (all.size() >= options.max_covers) {
                        truncated = true;
                        break;
                    }
                    std::vector<std::size_t> cover;
                    for (std::size_t i = 0; i < rc.size(); ++i)
                        cover.push_back(r.members[rc[i]][pick[i]]);
                    std::sort(cover.begin(), cover.end());
                    all.push_back(std::move(cover));
                    std::size_t i = 0;
                    while (i < rc.size() && ++pick[i] == r.members[rc[i]].size())
                        pick[i++] = 0;
                    if (i == rc.size())
                        break;
                }
            }
        }
        std::sort(all.begin(), all.end());
        res.all_minimum_covers = std::move(all);
        res.truncated = truncated;
        if (shared.timed_out)
            res.timed_out = true;
        res.stats.nodes = nodes.load();
        res.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    }
    return res;
}

StructureReport analyze_min_covers(const CoverResult& result, const MembershipMatrix& matrix) {
    if (!result.all_minimum_covers)
        throw InputError("analyze_min_covers needs the full list of minimum covers");
    StructureReport rep;
    rep.n = matrix.n();
    rep.truncated = result.truncated;
    const Factorization f = factorize(matrix.n());
    rep.applicable = f.r() >= 2;
    if (rep.applicable)
        rep.p_min = p_min_set(matrix.n());
    for (const auto& cover : *result.all_minimum_covers) {
        CoverShape shape;
        std::vector<const Imprimitive*> wreaths;
        for (std::size_t c : cover) {
            const auto& cls = matrix.classes()[c];
            if (const auto* in = cls.get_if<Intransitive>())
                shape.intransitive.push_back(in->x);
            else {
                shape.others.push_back(cls.label());
                if (const auto* im = cls.get_if<Imprimitive>())
                    wreaths.push_back(im);
            }
        }
        std::sort(shape.intransitive.begin(), shape.intransitive.end());
        if (rep.applicable) {
            shape.intransitive_is_p_min = shape.intransitive == rep.p_min;
            if (shape.others.size() == 2 && wreaths.size() == 2) {
                const int n = matrix.n();
                auto for_prime = [&](const Imprimitive* w, int p) { return w->b == p || w->b == n / p; };
                const int p1 = static_cast<int>(f.prime(1)), p2 = static_cast<int>(f.prime(2));
                shape.others_are_two_wreaths = (for_prime(wreaths[0], p1) && for_prime(wreaths[1], p2)) ||
                                               (for_prime(wreaths[0], p2) && for_prime(wreaths[1], p1));
            }
        }
        if (shape.intransitive_is_p_min && shape.others_are_two_wreaths)
            ++rep.agree;
        else
            ++rep.disagree;
        rep.covers.push_back(std::move(shape));
    }
    return rep;
}

} // namespace ncover
