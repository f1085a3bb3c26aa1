#include "prodquot/ram_types.hpp"

#include <algorithm>
#include <sstream>

#include "prodquot/errors.hpp"

namespace prodquot {

std::string RamType::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) out << ',';
        out << orders[i];
    }
    out << ']';
    return out.str();
}

RamType ram_type(std::vector<std::uint32_t> orders) {
    if (orders.empty()) throw Error("a branching signature needs at least one entry");
    for (std::uint32_t m : orders)
        if (m < 2) throw Error("branching orders must be at least 2");
    std::sort(orders.begin(), orders.end());
    RamType A;
    A.theta_value = Rational(-2);
    for (std::uint32_t m : orders) A.theta_value += Rational(1) - Rational(1, m);
    A.orders = std::move(orders);
    return A;
}

Rational theta(const RamType& A) { return A.theta_value; }

Rational alpha(const RamType& A) {
    if (A.theta_value.is_zero())
        throw ThetaZero("type " + A.str() + " has theta = 0, so alpha is undefined");
    return Rational(2) / A.theta_value;
}

bool is_admissible(const RamType& A) {
    if (!A.theta_value.is_positive()) return false;
    Rational a = Rational(2) / A.theta_value;
    if (!a.is_integer() || !a.is_positive()) return false;
    std::int64_t ai = a.as_integer();
    for (std::uint32_t m : A.orders)
        if (ai % m != 0) return false;
    return true;
}

namespace {

// Shared scan over nondecreasing entry tuples.  The region is bounded by
// two facts derived on the fly:
//  * at a node where theta stays below every positive bound even with all
//    remaining entries at infinity (partial + remaining <= 0), no
//    completion has theta > 0;
//  * once the lower bound T(m) = partial + remaining*(1 - 1/m) satisfies
//    m * T(m) > 2, every completion has alpha = 2/theta < m <= max entry,
//    which entry | alpha rules out; T is increasing in m, so the scan stops.
// The `require_divisibility` flag only changes the final filter, not the
// region, so the relaxed variant exposes exactly the types the divisibility
// test removes.
void scan_level(std::uint32_t r, std::vector<std::uint32_t>& prefix, Rational partial,
                bool require_divisibility, std::vector<RamType>& out) {
    if (prefix.size() == r) {
        if (!partial.is_positive()) return;
        Rational a = Rational(2) / partial;
        if (!a.is_integer()) return;
        std::int64_t ai = a.as_integer();
        if (require_divisibility)
            for (std::uint32_t m : prefix)
                if (ai % m != 0) return;
        RamType A;
        A.orders = prefix;
        A.theta_value = partial;
        out.push_back(std::move(A));
        return;
    }
    const std::uint32_t remaining = r - static_cast<std::uint32_t>(prefix.size());
    if (partial + Rational(remaining) <= Rational(0)) return;
    const std::uint32_t lo = prefix.empty() ? 2 : prefix.back();
    for (std::uint32_t m = lo;; ++m) {
        Rational lower = partial + Rational(remaining) * (Rational(1) - Rational(1, m));
        if (lower.is_positive() && Rational(m) * lower > Rational(2)) break;
        prefix.push_back(m);
        scan_level(r, prefix, partial + Rational(1) - Rational(1, m),
                   require_divisibility, out);
        prefix.pop_back();
    }
}

std::vector<RamType> scan_all(bool require_divisibility) {
    std::vector<RamType> out;
    for (std::uint32_t r = 3;; ++r) {
        Rational theta_min = Rational(-2) + Rational(r, 2);
        // Once even the all-2s tuple forces alpha < 2, no entry can divide
        // alpha at this length or any longer one (theta_min grows with r).
        if (theta_min.is_positive() && Rational(2) / theta_min < Rational(2)) break;
        std::vector<std::uint32_t> prefix;
        scan_level(r, prefix, Rational(-2), require_divisibility, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<RamType>& enumerate_admissible_types() {
    static const std::vector<RamType> kTypes = scan_all(true);
    return kTypes;
}

std::vector<RamType> enumerate_integer_alpha_types() { return scan_all(false); }

const std::vector<std::uint32_t>& admissible_alpha_values() {
    static const std::vector<std::uint32_t> kValues = [] {
        std::vector<std::uint32_t> v;
        for (const RamType& A : enumerate_admissible_types())
            v.push_back(static_cast<std::uint32_t>(alpha(A).as_integer()));
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }();
    return kValues;
}

bool is_admissible_alpha(std::uint64_t a) {
    const auto& vals = admissible_alpha_values();
    return std::binary_search(vals.begin(), vals.end(), a);
}

std::uint32_t max_alpha() { return admissible_alpha_values().back(); }

std::uint32_t genus_from_rh(std::uint32_t order, const RamType& A) {
    Rational t = Rational(static_cast<std::int64_t>(order)) * A.theta_value;
    if (!t.is_integer() || !t.is_positive() || t.as_integer() % 2 != 0)
        throw NonIntegralGenus("order " + std::to_string(order) + " with type " +
                               A.str() + " gives no integer genus");
    return static_cast<std::uint32_t>(1 + t.as_integer() / 2);
}

std::int64_t euler_number(std::uint64_t order, const GenusVector& g) {
    if (order == 0) throw Error("group order must be positive");
    if (g.genera.empty()) throw Error("genus vector must be non-empty");
    __int128 prod = 1;
    for (std::uint32_t gi : g.genera) {
        if (gi < 2) throw Error("curve genera must be at least 2");
        prod *= (gi - 1);
        if (prod > (__int128(1) << 100)) throw Error("genus product overflow");
    }
    __int128 sign = (g.genera.size() % 2 == 0) ? 1 : -1;
    __int128 numerator = sign * prod;
    for (std::size_t i = 0; i < g.genera.size(); ++i) numerator *= 2;
    if (numerator % static_cast<__int128>(order) != 0)
        throw NonIntegral("Euler number is not an integer for this order");
    __int128 e = numerator / static_cast<__int128>(order);
    if (e < INT64_MIN || e > INT64_MAX) throw Error("Euler number overflow");
    return static_cast<std::int64_t>(e);
}

std::vector<RamType> types_for(std::uint32_t order, std::uint32_t alpha_target,
                               const std::set<std::uint32_t>& element_orders) {
    std::vector<RamType> out;
    if (alpha_target == 0 || order % alpha_target != 0) return out;
    for (const RamType& A : enumerate_admissible_types()) {
        if (alpha(A).as_integer() != static_cast<std::int64_t>(alpha_target)) continue;
        bool fits = true;
        for (std::uint32_t m : A.orders)
            if (!element_orders.count(m)) {
                fits = false;
                break;
            }
        if (fits) out.push_back(A);
    }
    return out;
}

}  // namespace prodquot
