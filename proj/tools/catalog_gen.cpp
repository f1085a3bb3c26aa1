// Offline generator: classifies, up to isomorphism, all finite groups of the
// orders the catalog ships, and freezes them into catalog files as explicit
// permutation generators.
//
// Method: every group with a nontrivial abelianization has a normal subgroup
// of prime index p, so the groups of order n are exactly the cyclic
// extensions of the groups of order n/p (over all primes p | n), plus the
// perfect groups (here: the simple groups of order 60 and 168).  A cyclic
// extension of N by p is determined by a pair (phi, n0) with phi in Aut(N),
// n0 in N, phi(n0) = n0 and phi^p = conjugation-by-n0; the extension
// multiplies as (x,i)(y,j) = (x phi^i(y) n0^[i+j>=p], (i+j) mod p).
// Pairs are enumerated with phi up to Aut(N)-conjugacy and n0 up to the
// centralizer of phi; the remaining redundancy is removed by explicit
// isomorphism testing.  Counts per order are validated against the standard
// classification totals before anything is written.
//
// Build target: prodquot-catalog-gen.  Regenerating the shipped files is a
// no-op unless the classification logic changes; counts per order are
// validated before anything is written, so a silent regression is loud.

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "prodquot/errors.hpp"
#include "prodquot/isomorphism.hpp"
#include "prodquot/group.hpp"
#include "prodquot/perm.hpp"

using prodquot::Perm;
using prodquot::PermGroup;

using AutMap = std::vector<std::uint32_t>;  // element-index map on a group

// ----------------------------------------------------------------- helpers

static AutMap identity_map(std::uint32_t n) {
    AutMap m(n);
    for (std::uint32_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

// (a o b)(x) = a[b[x]]
static AutMap compose_map(const AutMap& a, const AutMap& b) {
    AutMap r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

static AutMap inverse_map(const AutMap& a) {
    AutMap r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
    return r;
}

static AutMap map_power(const AutMap& a, std::uint32_t k) {
    AutMap r = identity_map(static_cast<std::uint32_t>(a.size()));
    for (std::uint32_t i = 0; i < k; ++i) r = compose_map(a, r);
    return r;
}

namespace {

// ---------------------------------------------------------------- classifier

struct Key {
    std::uint32_t order;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order_hist;
    std::vector<std::size_t> class_sizes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ab_hist;
    std::uint32_t derived;
    std::uint32_t center;

    auto tie() const { return std::tie(order, order_hist, class_sizes, ab_hist, derived, center); }
    bool operator<(const Key& o) const { return tie() < o.tie(); }
};

Key key_of(const PermGroup& g) {
    Key k;
    k.order = g.order();
    k.order_hist.assign(g.order_histogram().begin(), g.order_histogram().end());
    for (const auto& c : g.conjugacy_classes()) k.class_sizes.push_back(c.size());
    std::sort(k.class_sizes.begin(), k.class_sizes.end());
    k.ab_hist.assign(g.abelianization_histogram().begin(),
                     g.abelianization_histogram().end());
    k.derived = g.derived_subgroup_order();
    k.center = g.center().count();
    return k;
}

struct Classifier {
    std::vector<PermGroup> reps;
    std::map<Key, std::vector<std::size_t>> buckets;

    bool add(PermGroup&& g) {
        Key k = key_of(g);
        auto& bucket = buckets[k];
        for (std::size_t i : bucket)
            if (prodquot::are_isomorphic(reps[i], g)) return false;
        bucket.push_back(reps.size());
        reps.push_back(std::move(g));
        return true;
    }
};

// ------------------------------------------------------- extension builder

// Greedy ascending generating sequence (used for emission).
std::vector<std::uint32_t> ascending_generators(const PermGroup& g) {
    std::vector<std::uint32_t> seq;
    prodquot::ElementSet have = prodquot::ElementSet::singleton(g.order(), 0);
    for (std::uint32_t x = 1; x < g.order() && have.count() < g.order(); ++x) {
        if (have.contains(x)) continue;
        seq.push_back(x);
        std::vector<std::uint32_t> members = have.to_list();
        members.push_back(x);
        have = g.closure_of_elements(members);
    }
    return seq;
}

PermGroup build_extension(const PermGroup& N, std::uint32_t p, const AutMap& phi,
                          std::uint32_t n0) {
    const std::uint32_t m = N.order();
    std::vector<AutMap> phi_pow(p);
    phi_pow[0] = identity_map(m);
    for (std::uint32_t i = 1; i < p; ++i) phi_pow[i] = compose_map(phi, phi_pow[i - 1]);

    auto idx = [m](std::uint32_t x, std::uint32_t i) { return i * m + x; };

    std::vector<Perm> gens;
    for (std::uint32_t s : ascending_generators(N)) {
        Perm g;
        g.img.resize(std::size_t(m) * p);
        for (std::uint32_t i = 0; i < p; ++i)
            for (std::uint32_t x = 0; x < m; ++x)
                g.img[idx(x, i)] = idx(N.mul(s, x), i);
        gens.push_back(std::move(g));
    }
    {
        Perm t;
        t.img.resize(std::size_t(m) * p);
        for (std::uint32_t i = 0; i < p; ++i)
            for (std::uint32_t x = 0; x < m; ++x) {
                std::uint32_t z = phi_pow[1][x];
                if (i + 1 == p) z = N.mul(z, n0);
                t.img[idx(x, i)] = idx(z, (i + 1) % p);
            }
        gens.push_back(std::move(t));
    }
    PermGroup g = PermGroup::from_generators(m * p, std::move(gens), PermGroup::kHardCap);
    assert(g.order() == m * p);
    return g;
}

bool is_elementary_abelian_2_32(const PermGroup& g) {
    if (g.order() != 32) return false;
    auto it = g.order_histogram().find(2);
    return it != g.order_histogram().end() && it->second == 31;
}

// Order-32 elementary abelian case: Aut is too large to enumerate, but for
// odd p the extension splits and the action is a matrix of order dividing p.
// For p == 3 the conjugacy classes of such matrices are block-diagonal with
// k in {0,1,2} companion blocks of x^2+x+1; build those three directly.
std::vector<PermGroup> elementary_32_extensions(const PermGroup& N, std::uint32_t p) {
    assert(p == 3);
    std::vector<std::uint32_t> basis = ascending_generators(N);
    assert(basis.size() == 5);
    std::vector<std::uint32_t> elem_of(32);
    elem_of[0] = 0;
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
        const int low = __builtin_ctz(mask);
        elem_of[mask] = N.mul(elem_of[mask & (mask - 1)], basis[low]);
    }
    std::vector<std::uint32_t> mask_of(32);
    for (std::uint32_t mask = 0; mask < 32; ++mask) mask_of[elem_of[mask]] = mask;

    std::vector<PermGroup> out;
    for (int k = 0; k <= 2; ++k) {
        AutMap phi(32);
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            std::uint32_t v = 0;
            for (int blk = 0; blk < k; ++blk) {
                const std::uint32_t a = (mask >> (2 * blk)) & 1;
                const std::uint32_t b = (mask >> (2 * blk + 1)) & 1;
                // (a,b) -> (b, a^b): order-3 linear map on the 2-dim block
                v |= b << (2 * blk);
                v |= (a ^ b) << (2 * blk + 1);
            }
            for (int rest = 2 * k; rest < 5; ++rest) v |= mask & (1u << rest);
            phi[elem_of[mask]] = elem_of[v];
        }
        out.push_back(build_extension(N, p, phi, 0));
    }
    return out;
}

// All extensions of N by a cyclic group of prime order p, with phi taken up
// to Aut(N)-conjugacy and n0 up to the centralizer of phi.
std::vector<PermGroup> cyclic_extensions(const PermGroup& N, std::uint32_t p) {
    const std::uint32_t m = N.order();
    if (is_elementary_abelian_2_32(N)) return elementary_32_extensions(N, p);

    const bool coprime = (m % p) != 0;
    std::vector<AutMap> auts = prodquot::automorphisms(N);

    // Conjugation maps and a lookup from an inner map to one representative.
    std::vector<AutMap> inn(m);
    std::map<AutMap, std::uint32_t> inn_rep;
    for (std::uint32_t z = 0; z < m; ++z) {
        AutMap f(m);
        for (std::uint32_t x = 0; x < m; ++x) f[x] = N.mul(N.mul(z, x), N.inv(z));
        inn[z] = f;
        inn_rep.emplace(std::move(f), z);
    }
    std::vector<std::uint32_t> center = N.center().to_list();

    // Candidate phi indices with phi^p inner, keyed for class sweeping.
    std::map<AutMap, std::size_t> aut_index;
    for (std::size_t i = 0; i < auts.size(); ++i) aut_index.emplace(auts[i], i);

    std::vector<char> eligible(auts.size(), 0);
    std::vector<std::uint32_t> inner_rep_of(auts.size(), 0);
    const AutMap id = identity_map(m);
    for (std::size_t i = 0; i < auts.size(); ++i) {
        AutMap pp = map_power(auts[i], p);
        if (coprime) {
            if (pp == id) {
                eligible[i] = 1;
                inner_rep_of[i] = 0;
            }
        } else {
            auto it = inn_rep.find(pp);
            if (it != inn_rep.end()) {
                eligible[i] = 1;
                inner_rep_of[i] = it->second;
            }
        }
    }

    std::vector<PermGroup> out;
    std::vector<char> classified(auts.size(), 0);
    for (std::size_t i = 0; i < auts.size(); ++i) {
        if (!eligible[i] || classified[i]) continue;
        // Sweep the conjugacy class of phi and record its centralizer.
        const AutMap& phi = auts[i];
        std::vector<std::size_t> centralizer;
        for (std::size_t c = 0; c < auts.size(); ++c) {
            AutMap conj = compose_map(compose_map(auts[c], phi), inverse_map(auts[c]));
            auto it = aut_index.find(conj);
            assert(it != aut_index.end());
            classified[it->second] = 1;
            if (it->second == i) centralizer.push_back(c);
        }

        // Valid n0: in z*Z(N), fixed by phi, with inn(n0) == phi^p exactly.
        const AutMap pp = map_power(phi, p);
        std::vector<std::uint32_t> valid;
        if (coprime) {
            valid.push_back(0);  // split extension; redundant n0 are skipped
        } else {
            const std::uint32_t z = inner_rep_of[i];
            for (std::uint32_t zc : center) {
                const std::uint32_t n0 = N.mul(z, zc);
                if (phi[n0] == n0 && inn[n0] == pp) valid.push_back(n0);
            }
            std::sort(valid.begin(), valid.end());
        }

        // Reduce n0 over centralizer orbits.
        std::set<std::uint32_t> seen;
        for (std::uint32_t n0 : valid) {
            if (seen.count(n0)) continue;
            for (std::size_t c : centralizer) seen.insert(auts[c][n0]);
            out.push_back(build_extension(N, p, phi, n0));
        }
    }
    return out;
}

// ------------------------------------------------------------ perfect groups

PermGroup alternating_5() {
    std::vector<Perm> gens{prodquot::parse_cycles("(0 1 2 3 4)", 5),
                           prodquot::parse_cycles("(0 1 2)", 5)};
    PermGroup g = PermGroup::from_generators(5, std::move(gens), PermGroup::kHardCap);
    assert(g.order() == 60);
    return g;
}

PermGroup projective_168() {
    // Action on the projective line over the 7-element field (point 7 = inf):
    // z -> z+1 and z -> -1/z.
    std::vector<Perm> gens{prodquot::parse_cycles("(0 1 2 3 4 5 6)", 8),
                           prodquot::parse_cycles("(0 7)(1 6)(2 3)(4 5)", 8)};
    PermGroup g = PermGroup::from_generators(8, std::move(gens), PermGroup::kHardCap);
    assert(g.order() == 168);
    return g;
}

// ------------------------------------------------------------------ driver

const std::vector<std::uint32_t> kOrders = {4,  6,  8,  9,  10, 12, 14,  15,  18,
                                            16, 20, 21, 24, 28, 30, 32,  36,  40,
                                            42, 48, 56, 60, 72, 80, 84,  96,  144,
                                            168};

const std::map<std::uint32_t, std::uint32_t> kExpected = {
    {4, 2},   {6, 2},   {8, 5},   {9, 2},   {10, 2},  {12, 5},  {14, 2},
    {15, 1},  {16, 14}, {18, 5},  {20, 5},  {21, 2},  {24, 15}, {28, 4},
    {30, 4},  {32, 51}, {36, 14}, {40, 14}, {42, 6},  {48, 52}, {56, 13},
    {60, 13}, {72, 50}, {80, 52}, {84, 15}, {96, 231}, {144, 197}, {168, 57}};

const std::vector<std::uint32_t> kShipped = {16, 24, 32, 36,  40,  48,
                                             60, 72, 80, 96, 144, 168};

void emit_catalog(const std::string& dir, std::uint32_t order,
                  const std::vector<PermGroup>& groups) {
    char fname[64];
    std::snprintf(fname, sizeof fname, "%s/o%03u.cat", dir.c_str(), order);
    std::ofstream out(fname);
    out << "# all groups of order " << order
        << ", realized by explicit permutation generators\n";
    out << "expect order " << order << " count " << groups.size() << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const PermGroup& g = groups[i];
        char name[32];
        std::snprintf(name, sizeof name, "o%u_g%02zu", order, i + 1);
        out << "\ngroup " << name << " order " << order << "\n";
        out << "perm degree " << g.degree() << "\n";
        for (std::uint32_t s : ascending_generators(g))
            out << prodquot::cycle_string(g.element(s)) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string outdir;
    std::uint32_t max_order = 168;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--max-order") == 0 && i + 1 < argc)
            max_order = static_cast<std::uint32_t>(std::atoi(argv[++i]));
        else
            outdir = argv[i];
    }

    std::map<std::uint32_t, std::vector<PermGroup>> by_order;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        std::string cyc = "(";
        for (std::uint32_t i = 0; i < p; ++i) cyc += (i ? " " : "") + std::to_string(i);
        cyc += ")";
        by_order[p].push_back(PermGroup::from_generators(
            p, {prodquot::parse_cycles(cyc, p)}, PermGroup::kHardCap));
    }

    std::vector<std::uint32_t> orders = kOrders;
    std::sort(orders.begin(), orders.end());

    for (std::uint32_t n : orders) {
        if (n > max_order) break;
        const auto t0 = std::chrono::steady_clock::now();
        Classifier cls;
        std::size_t candidates = 0;
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            if (n % p != 0) continue;
            const std::uint32_t m = n / p;
            auto it = by_order.find(m);
            if (it == by_order.end()) continue;  // m == 1 (n prime) never happens here
            for (const PermGroup& N : it->second)
                for (PermGroup& g : cyclic_extensions(N, p)) {
                    ++candidates;
                    cls.add(std::move(g));
                }
        }
        if (n == 60) {
            ++candidates;
            cls.add(alternating_5());
        }
        if (n == 168) {
            ++candidates;
            cls.add(projective_168());
        }

        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const std::uint32_t expected = kExpected.at(n);
        std::printf("order %3u: %3zu classes from %5zu candidates (expected %3u) %s  [%.1fs]\n",
                    n, cls.reps.size(), candidates, expected,
                    cls.reps.size() == expected ? "ok" : "MISMATCH", secs);
        std::fflush(stdout);
        if (cls.reps.size() != expected) return 1;
        by_order[n] = std::move(cls.reps);
    }

    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        for (std::uint32_t n : kShipped) {
            if (n > max_order) continue;
            emit_catalog(outdir, n, by_order.at(n));
            std::printf("wrote %s/o%03u.cat (%zu groups)\n", outdir.c_str(), n,
                        by_order.at(n).size());
        }
    }
    return 0;
}
