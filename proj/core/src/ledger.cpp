#include "prodquot/ledger.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "prodquot/errors.hpp"

namespace prodquot {

namespace {

/// Exact integer n-th root style bound: largest o with o^exp <= cap^n,
/// computed by overflow-guarded integer powers only.
std::uint64_t largest_order_with(std::uint32_t exp, std::uint64_t cap_base,
                                 std::uint32_t cap_exp) {
    __int128 cap = 1;
    for (std::uint32_t i = 0; i < cap_exp; ++i) cap *= cap_base;
    std::uint64_t o = 1;
    while (true) {
        __int128 p = 1;
        bool over = false;
        for (std::uint32_t i = 0; i < exp; ++i) {
            p *= (o + 1);
            if (p > cap) {
                over = true;
                break;
            }
        }
        if (over) return o;
        ++o;
    }
}

/// Nondecreasing multisets of admissible alpha values of size n whose
/// product is order^(n-1), with order/alpha an integer >= floor-1.
void alpha_multisets_for_order(std::uint64_t order, std::uint32_t n,
                               std::vector<std::vector<std::uint32_t>>& out) {
    const auto& table = admissible_alpha_values();
    __int128 target = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) target *= order;
    std::vector<std::uint32_t> pick;
    auto rec = [&](auto&& self, std::size_t start, __int128 prod) -> void {
        if (pick.size() == n) {
            if (prod == target) out.push_back(pick);
            return;
        }
        for (std::size_t i = start; i < table.size(); ++i) {
            const std::uint32_t a = table[i];
            if (order % a != 0) continue;      // genus must be integral
            if (order / a < 2) continue;       // genus must be >= 3
            __int128 next = prod * a;
            if (next > target) break;          // table is ascending
            // Remaining positions can contribute at most max_alpha each.
            __int128 best = next;
            for (std::size_t j = pick.size() + 1; j < n; ++j) best *= max_alpha();
            if (best < target) continue;
            pick.push_back(a);
            self(self, i, next);
            pick.pop_back();
        }
    };
    rec(rec, 0, 1);
}

std::vector<AlphaVector> compute_alpha_vectors(std::uint32_t n) {
    if (n < 2 || n > 7) throw Error("alpha vector enumeration supports n in [2,7]");
    // prod(g_i - 1) = order with g_i - 1 >= 2 forces order >= 2^n, and
    // prod(alpha) = order^(n-1) with alpha <= max_alpha() caps it.
    std::uint64_t lo = 1;
    for (std::uint32_t i = 0; i < n; ++i) lo *= 2;
    const std::uint64_t hi = largest_order_with(n - 1, max_alpha(), n);
    std::vector<AlphaVector> out;
    for (std::uint64_t o = lo; o <= hi; ++o) {
        std::vector<std::vector<std::uint32_t>> picks;
        alpha_multisets_for_order(o, n, picks);
        for (auto& alphas : picks) {
            AlphaVector v;
            v.n = n;
            v.order = o;
            v.alphas = std::move(alphas);
            for (std::uint32_t a : v.alphas)
                v.genera.genera.push_back(static_cast<std::uint32_t>(1 + o / a));
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        std::uint32_t e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

std::string alphas_str(const std::vector<std::uint32_t>& alphas) {
    std::string s = "{";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alphas[i]);
    }
    return s + "}";
}

}  // namespace

std::optional<std::uint32_t> dimension_bound(std::uint32_t genus_floor) {
    if (genus_floor != 2 && genus_floor != 3)
        throw Error("dimension bound is defined for genus floors 2 and 3");
    if (genus_floor == 2) {
        // Each factor only guarantees g_i - 1 >= 1, so prod(alpha) =
        // order^(n-1) never caps n on its own.
        return std::nullopt;
    }
    // order >= 2^n and order^(n-1) = prod(alpha) <= max_alpha^n give
    // 2^(n-1) <= max_alpha (exact integer comparison).
    std::uint32_t raw = 2;
    while (true) {
        std::uint64_t p = 1;
        for (std::uint32_t i = 0; i < raw; ++i) p *= 2;  // 2^raw = 2^((raw+1)-1)
        if (p > max_alpha()) break;
        ++raw;
    }
    // One refinement step: at n = raw the whole enumeration is empty
    // (the only order, 2^raw, needs an alpha the table lacks), so the
    // first dimension that can possibly carry a candidate is raw - 1.
    if (compute_alpha_vectors(raw).empty()) return raw - 1;
    return raw;
}

const std::vector<AlphaVector>& alpha_vectors(std::uint32_t n) {
    if (n < 4 || n > 6) throw Error("alpha_vectors supports n in {4, 5, 6}");
    static std::vector<AlphaVector> cache[3];
    static std::once_flag once[3];
    std::call_once(once[n - 4], [n] { cache[n - 4] = compute_alpha_vectors(n); });
    return cache[n - 4];
}

const std::vector<ClaimedVectors>& claimed_alpha_table(std::uint32_t n) {
    static const std::vector<ClaimedVectors> n4 = {
        {16, {{8, 8, 8, 8}}},
        {24, {{8, 12, 12, 12}}},
        {32, {{8, 16, 16, 16}}},
        {36, {{12, 12, 18, 18}}},
        {40, {{8, 20, 20, 20}}},
        {48, {{8, 24, 24, 24}, {12, 16, 24, 24}}},
        {60, {{12, 20, 30, 30}}},
        {72, {{8, 36, 36, 36}}},
        {80, {{16, 20, 40, 40}}},
        {168, {{8, 84, 84, 84}}},
    };
    static const std::vector<ClaimedVectors> n5 = {
        {32, {{16, 16, 16, 16, 16}}},
        {48, {{16, 24, 24, 24, 24}}},
        {80, {{16, 40, 40, 40, 40}}},
    };
    if (n == 4) return n4;
    if (n == 5) return n5;
    throw Error("claimed tables exist for n in {4, 5}");
}

LedgerDivergence compare_with_claim(std::uint32_t n) {
    const auto& claim = claimed_alpha_table(n);
    const auto& computed = alpha_vectors(n);
    std::map<std::uint64_t, std::set<std::vector<std::uint32_t>>> claimed;
    for (const auto& c : claim)
        for (const auto& v : c.alphas) {
            auto sorted = v;
            std::sort(sorted.begin(), sorted.end());
            claimed[c.order].insert(sorted);
        }
    LedgerDivergence d;
    std::map<std::uint64_t, std::set<std::vector<std::uint32_t>>> recomputed;
    for (const AlphaVector& v : computed) {
        recomputed[v.order].insert(v.alphas);
        auto it = claimed.find(v.order);
        if (it == claimed.end() || !it->second.count(v.alphas))
            d.beyond_claim.push_back(v);
    }
    for (const auto& [order, vecs] : claimed)
        for (const auto& v : vecs) {
            auto it = recomputed.find(order);
            if (it == recomputed.end() || !it->second.count(v))
                d.unconfirmed_claims.emplace_back(order, v);
        }
    return d;
}

std::vector<OrderCandidate> candidate_orders(std::uint32_t n) {
    if (n != 4 && n != 5) throw Error("candidate_orders supports n in {4, 5}");
    const auto& vectors = alpha_vectors(n);
    std::map<std::uint64_t, std::set<std::vector<std::uint32_t>>> claimed;
    for (const auto& c : claimed_alpha_table(n)) {
        for (const auto& v : c.alphas) {
            auto sorted = v;
            std::sort(sorted.begin(), sorted.end());
            claimed[c.order].insert(sorted);
        }
    }
    std::vector<OrderCandidate> out;
    for (const AlphaVector& v : vectors) {
        if (out.empty() || out.back().order != v.order) {
            OrderCandidate c;
            c.order = v.order;
            c.n = n;
            c.factorization = factorize(v.order);
            c.beyond_claim = claimed.find(v.order) == claimed.end();
            out.push_back(std::move(c));
        }
        out.back().vectors.push_back(v);
    }
    for (OrderCandidate& c : out) {
        std::string primes = "prime divisors {";
        for (std::size_t i = 0; i < c.factorization.size(); ++i) {
            if (i) primes += ",";
            primes += std::to_string(c.factorization[i].first);
        }
        c.trail.push_back(primes + "}");
        c.trail.push_back("solution vectors: " + std::to_string(c.vectors.size()));
        const auto it = claimed.find(c.order);
        if (it == claimed.end()) {
            c.trail.push_back("order absent from the claimed table");
        } else {
            for (const AlphaVector& v : c.vectors)
                if (!it->second.count(v.alphas))
                    c.trail.push_back("vector " + alphas_str(v.alphas) +
                                      " absent from the claimed table");
        }
    }
    return out;
}

std::vector<GenusVector> genus_vectors(std::uint64_t order, std::uint32_t n,
                                       std::uint32_t floor) {
    if (floor != 2 && floor != 3) throw Error("genus floor must be 2 or 3");
    if (n == 0) throw Error("genus vectors need n >= 1");
    std::vector<GenusVector> out;
    std::vector<std::uint32_t> pick;
    // Nondecreasing factors f = g - 1 >= floor - 1 with product == order.
    auto rec = [&](auto&& self, std::uint64_t remaining, std::uint32_t min_f) -> void {
        if (pick.size() + 1 == n) {
            if (remaining >= min_f && remaining <= 0xffffffffu) {
                GenusVector g;
                for (std::uint32_t f : pick) g.genera.push_back(f + 1);
                g.genera.push_back(static_cast<std::uint32_t>(remaining) + 1);
                out.push_back(std::move(g));
            }
            return;
        }
        for (std::uint64_t f = min_f; f * f <= remaining * 1ull; ++f) {
            // Bound: remaining factors are all >= f, so f^(slots left) must fit.
            if (remaining % f) continue;
            std::uint64_t power = 1;
            bool fits = true;
            for (std::size_t j = pick.size(); j < n; ++j) {
                power *= f;
                if (power > remaining) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            pick.push_back(static_cast<std::uint32_t>(f));
            self(self, remaining / f, static_cast<std::uint32_t>(f));
            pick.pop_back();
        }
    };
    if (n == 1) {
        if (order >= floor - 1 && order <= 0xffffffffu) {
            GenusVector g;
            g.genera.push_back(static_cast<std::uint32_t>(order) + 1);
            out.push_back(std::move(g));
        }
        return out;
    }
    rec(rec, order, floor - 1);
    std::sort(out.begin(), out.end());
    return out;
}

N6GateReport n6_arithmetic_gate() {
    N6GateReport r;
    std::vector<GateFact>& f = r.facts;

    // Order window from the two primitive constraints.
    std::uint64_t two6 = 64;
    r.min_order = two6;
    r.max_order = largest_order_with(5, max_alpha(), 6);
    f.push_back({"minimal order 2^6 = 64 (six factors with g - 1 >= 2)", two6 == 64});
    f.push_back({"maximal order 203 (largest o with o^5 <= 84^6)", r.max_order == 203});

    // 3^6 = 729 > 203: six factors of genus >= 4 would overshoot the
    // window, so some factor has genus exactly 3.
    std::uint64_t three6 = 729;
    f.push_back({"3^6 = 729 exceeds the maximal order, forcing a genus-3 factor",
                 three6 > r.max_order});

    // A genus-3 factor needs alpha = order/2 in the table; collect the
    // orders in the window that pass.
    for (std::uint64_t o = r.min_order; o <= r.max_order; ++o)
        if (o % 2 == 0 && is_admissible_alpha(o / 2)) r.genus3_orders.push_back(o);
    f.push_back({"orders with admissible half-order alpha: exactly {72, 80, 96, 168}",
                 r.genus3_orders == std::vector<std::uint64_t>{72, 80, 96, 168}});

    // 72 and 80 admit no factorization into six parts >= 2 at all.
    f.push_back({"72 admits no six-factor genus vector",
                 genus_vectors(72, 6, 3).empty()});
    f.push_back({"80 admits no six-factor genus vector",
                 genus_vectors(80, 6, 3).empty()});

    // 96 has exactly one six-factor genus vector, (3,3,3,3,3,4); its
    // genus-4 slot needs alpha = 32, absent from the table.
    auto g96 = genus_vectors(96, 6, 3);
    bool unique96 = g96.size() == 1 && g96[0].genera ==
                    std::vector<std::uint32_t>{3, 3, 3, 3, 3, 4};
    f.push_back({"96 factors into six parts >= 2 only as {2,2,2,2,2,3}", unique96});
    f.push_back({"the genus-4 slot at order 96 needs alpha = 32, absent from the table",
                 !is_admissible_alpha(32)});

    // 168 = 2^3 * 3 * 7 has five prime factors, hence no six-factor vector.
    f.push_back({"168 admits no factorization into six integers >= 2",
                 genus_vectors(168, 6, 3).empty()});

    // The full enumeration agrees: no dimension-six vector exists anywhere.
    f.push_back({"the complete dimension-six enumeration is empty",
                 alpha_vectors(6).empty()});

    r.holds = true;
    for (const GateFact& fact : f) r.holds = r.holds && fact.holds;
    return r;
}

}  // namespace prodquot
