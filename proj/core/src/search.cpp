#include "prodquot/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "prodquot/errors.hpp"
#include "prodquot/ledger.hpp"

namespace prodquot {

namespace {

struct Task {
    std::vector<std::uint32_t> genera;  // ascending
    std::vector<RamType> types;         // aligned with genera
};

/// Enumeration product for one branching type on one group: total tuple
/// count, representatives for tuple assembly (one per distinct sigma set
/// when collapsing is on), and the intersection of every sigma set (used
/// to discard branches whose surviving elements no later choice can kill).
struct TypeSystems {
    std::uint64_t total = 0;
    std::vector<std::vector<std::uint32_t>> reps;
    std::vector<ElementSet> sigmas;
    ElementSet forced;
};

class TypeCache {
public:
    TypeCache(const PermGroup& g, bool dedup) : g_(g), dedup_(dedup) {}

    const TypeSystems& get(const RamType& a) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = store_.find(a);
        if (it != store_.end()) return it->second;
        TypeSystems ts;
        ts.forced = g_.full_set();
        std::map<ElementSet, std::vector<std::uint32_t>> by_sigma;
        ts.total = for_each_system(g_, a, [&](const std::vector<std::uint32_t>& tuple) {
            ElementSet s = sigma(g_, tuple);
            ts.forced &= s;
            if (dedup_) {
                by_sigma.emplace(std::move(s), tuple);
            } else {
                ts.sigmas.push_back(std::move(s));
                ts.reps.push_back(tuple);
            }
            return true;
        });
        if (dedup_) {
            for (auto& [s, tuple] : by_sigma) {
                ts.sigmas.push_back(s);
                ts.reps.push_back(std::move(tuple));
            }
        }
        return store_.emplace(a, std::move(ts)).first->second;
    }

private:
    const PermGroup& g_;
    bool dedup_;
    std::mutex mu_;
    std::map<RamType, TypeSystems> store_;
};

struct TaskResult {
    std::uint64_t systems = 0;
    std::uint64_t sigma_tests = 0;
    std::optional<StructureCandidate> witness;
};

/// Builds the deterministic task list: one task per (genus vector, per-slot
/// type choice).  Slots of equal genus share one type list; their choices
/// are constrained to nondecreasing list positions, so each multiset of
/// types is assembled exactly once.
std::vector<Task> build_tasks(const PermGroup& G, std::uint32_t n, std::uint32_t floor,
                              std::uint64_t* genus_vector_count) {
    std::vector<Task> tasks;
    const std::set<std::uint32_t> spectrum(G.order_spectrum().begin(),
                                           G.order_spectrum().end());
    const auto gvs = genus_vectors(G.order(), n, floor);
    *genus_vector_count = gvs.size();
    for (const GenusVector& gv : gvs) {
        std::vector<std::vector<RamType>> options(n);
        bool dead = false;
        for (std::uint32_t i = 0; i < n && !dead; ++i) {
            const std::uint64_t f = gv.genera[i] - 1;
            const std::uint64_t a = G.order() / f;
            if (a * f != G.order()) {
                dead = true;
                break;
            }
            options[i] = types_for(G.order(), static_cast<std::uint32_t>(a), spectrum);
            if (options[i].empty()) dead = true;
        }
        if (dead) continue;
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            Task t;
            t.genera = gv.genera;
            t.types.reserve(n);
            for (std::uint32_t i = 0; i < n; ++i) t.types.push_back(options[i][idx[i]]);
            tasks.push_back(std::move(t));
            int p = static_cast<int>(n) - 1;
            while (p >= 0) {
                ++idx[p];
                if (idx[p] < options[p].size()) break;
                --p;
            }
            if (p < 0) break;
            for (std::uint32_t q = p + 1; q < n; ++q)
                idx[q] = gv.genera[q] == gv.genera[q - 1] ? idx[q - 1] : 0;
        }
    }
    return tasks;
}

TaskResult run_task(const PermGroup& G, const Task& task, const ElementSet& seed,
                    TypeCache& cache) {
    TaskResult res;
    const std::uint32_t n = static_cast<std::uint32_t>(task.types.size());

    // Enumeration work is charged once per distinct type in the task.
    {
        std::set<RamType> distinct(task.types.begin(), task.types.end());
        for (const RamType& a : distinct) res.systems += cache.get(a).total;
    }

    std::vector<const TypeSystems*> slot(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        slot[i] = &cache.get(task.types[i]);
        if (slot[i]->reps.empty()) return res;  // no tuple of this type exists
    }

    // Visit slots with the fewest representatives first; the freeness
    // condition is symmetric in the slots, so reordering is sound.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return slot[a]->reps.size() < slot[b]->reps.size();
    });

    // suffix_forced[k] = elements contained in every candidate sigma set of
    // every slot from visit position k on.  A branch whose running
    // intersection still meets suffix_forced[k] outside the identity can
    // never reach {identity}.
    std::vector<ElementSet> suffix_forced(n + 1, G.full_set());
    for (int k = static_cast<int>(n) - 1; k >= 0; --k)
        suffix_forced[k] = suffix_forced[k + 1] & slot[order[k]]->forced;
    if (!(seed & suffix_forced[0]).is_identity_only()) return res;

    std::vector<std::size_t> chosen(n, 0);
    std::function<bool(std::uint32_t, const ElementSet&)> dfs =
        [&](std::uint32_t k, const ElementSet& running) -> bool {
        const TypeSystems& ts = *slot[order[k]];
        for (std::size_t j = 0; j < ts.sigmas.size(); ++j) {
            ElementSet next = running & ts.sigmas[j];
            ++res.sigma_tests;
            if (next.is_identity_only()) {
                // Every completion keeps the intersection at {identity};
                // the first representatives give the first such tuple.
                chosen[k] = j;
                for (std::uint32_t t = k + 1; t < n; ++t) chosen[t] = 0;
                return true;
            }
            if (k + 1 == n) continue;
            if (!(next & suffix_forced[k + 1]).is_identity_only()) continue;
            if (dfs(k + 1, next)) {
                chosen[k] = j;
                return true;
            }
        }
        return false;
    };
    if (!dfs(0, seed)) return res;

    StructureCandidate c;
    c.group = &G;
    c.n = n;
    c.systems.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t s = order[k];
        c.systems[s] = SphericalSystem{&G, slot[s]->reps[chosen[k]], task.types[s]};
    }
    c.genera.genera = task.genera;
    c.euler = euler_number(G.order(), c.genera);
    res.witness = std::move(c);
    return res;
}

SearchReport run_search(const PermGroup& G, std::uint32_t n, std::uint32_t floor,
                        const ElementSet& seed, const SearchOptions& opts,
                        bool seeded) {
    const auto t0 = std::chrono::steady_clock::now();
    if (floor != 2 && floor != 3) throw Error("genus floor must be 2 or 3");
    if (n < (seeded ? 1u : 2u))
        throw Error(seeded ? "seeded search needs at least one factor"
                           : "search needs at least two factors");
    if (seed.universe_size() != G.order())
        throw Error("seed set does not match the group");

    SearchReport rep;
    rep.group_name =
        opts.label.empty() ? "order " + std::to_string(G.order()) : opts.label;
    rep.n = n;

    std::uint64_t gv_count = 0;
    const std::vector<Task> tasks = build_tasks(G, n, floor, &gv_count);
    rep.stats.genus_vectors = gv_count;
    rep.stats.type_assignments = tasks.size();

    TypeCache cache(G, opts.dedup);
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    // Tasks are claimed in index order, so by the time any task with a
    // witness completes, every lower-indexed task has been fully run; the
    // minimum witness index and all counters below it are therefore
    // independent of the thread count.
    std::atomic<std::size_t> first_witness{SIZE_MAX};
    std::mutex err_mu;
    std::exception_ptr first_error;

    auto worker = [&]() {
        try {
            while (true) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) return;
                if (t > first_witness.load()) continue;  // result would be discarded
                results[t] = run_task(G, tasks[t], seed, cache);
                if (results[t].witness) {
                    std::size_t cur = first_witness.load();
                    while (t < cur && !first_witness.compare_exchange_weak(cur, t)) {
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };

    const std::uint32_t want = std::max(1u, opts.threads);
    const std::uint32_t nthreads =
        static_cast<std::uint32_t>(std::min<std::size_t>(want, std::max<std::size_t>(
                                                                   tasks.size(), 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::uint32_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::size_t counted = tasks.size();
    const std::size_t w = first_witness.load();
    if (w != SIZE_MAX) {
        counted = w + 1;
        rep.outcome = SearchOutcome::Witness;
        rep.witness = std::move(results[w].witness);
    }
    for (std::size_t t = 0; t < counted; ++t) {
        rep.stats.systems_enumerated += results[t].systems;
        rep.stats.sigma_tests += results[t].sigma_tests;
    }
    rep.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace

SearchReport search_structures(const PermGroup& G, std::uint32_t n,
                               std::uint32_t require_genus_ge,
                               const SearchOptions& opts) {
    return run_search(G, n, require_genus_ge, G.full_set(), opts, false);
}

SearchReport search_structures_seeded(const PermGroup& G, std::uint32_t n,
                                      std::uint32_t require_genus_ge,
                                      const ElementSet& seed,
                                      const SearchOptions& opts) {
    return run_search(G, n, require_genus_ge, seed, opts, true);
}

bool verify_candidate(const StructureCandidate& c) {
    if (c.group == nullptr) return false;
    const PermGroup& G = *c.group;
    const std::uint32_t n = c.n;
    if (n < 2) return false;
    if (c.systems.size() != n || c.genera.genera.size() != n) return false;

    __int128 shifted_product = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        const SphericalSystem& T = c.systems[i];
        if (T.group != c.group) return false;
        if (!is_admissible(T.type)) return false;
        if (!is_valid_system(G, T.type, T.elements)) return false;
        std::uint32_t g = 0;
        try {
            g = genus_from_rh(G.order(), T.type);
        } catch (const Error&) {
            return false;
        }
        if (g < 2 || g != c.genera.genera[i]) return false;
        shifted_product *= g - 1;
    }
    if (shifted_product != static_cast<__int128>(G.order())) return false;

    std::int64_t e = 0;
    try {
        e = euler_number(G.order(), c.genera);
    } catch (const Error&) {
        return false;
    }
    std::int64_t expected = 1;
    for (std::uint32_t i = 0; i < n; ++i) expected *= -2;
    if (e != c.euler || e != expected) return false;

    ElementSet acc = G.full_set();
    for (const SphericalSystem& T : c.systems) acc &= sigma(G, T.elements);
    return acc.is_identity_only();
}

}  // namespace prodquot
