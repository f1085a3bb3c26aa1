#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "prodquot/rational.hpp"

namespace prodquot {

/// A branching signature: sorted orders [m_1 <= ... <= m_r], each >= 2,
/// together with its exact theta = -2 + sum(1 - 1/m_j).
struct RamType {
    std::vector<std::uint32_t> orders;
    Rational theta_value;

    std::uint32_t r() const { return static_cast<std::uint32_t>(orders.size()); }

    friend bool operator==(const RamType& a, const RamType& b) {
        return a.orders == b.orders;
    }
    friend bool operator!=(const RamType& a, const RamType& b) { return !(a == b); }
    /// Deterministic order: by length, then lexicographically.
    friend bool operator<(const RamType& a, const RamType& b) {
        if (a.orders.size() != b.orders.size()) return a.orders.size() < b.orders.size();
        return a.orders < b.orders;
    }

    std::string str() const;
};

/// Builds a type from (unsorted) entries; validates r >= 1 and every
/// entry >= 2, sorts ascending, and computes theta exactly.
RamType ram_type(std::vector<std::uint32_t> orders);

Rational theta(const RamType& A);

/// 2 / theta(A); throws ThetaZero when theta is exactly zero.
Rational alpha(const RamType& A);

/// True iff theta(A) > 0, alpha(A) is a positive integer, and every entry
/// divides alpha(A).
bool is_admissible(const RamType& A);

/// The complete list of admissible types, ordered by length then
/// lexicographically.  The enumeration derives all of its own bounds:
/// lengths r >= 7 are proved empty (minimal theta is already 3/2, forcing
/// alpha <= 4/3 < 2 <= every entry, against entry | alpha), and each
/// position's scan stops at the first entry m with m * theta_lower(m) > 2,
/// which no divisible completion can satisfy.
const std::vector<RamType>& enumerate_admissible_types();

/// Diagnostic variant for negative-control self tests: scans the same
/// region but drops the entry-divides-alpha requirement, keeping every
/// type with theta > 0 and integer alpha.
std::vector<RamType> enumerate_integer_alpha_types();

/// Sorted distinct alpha values over the admissible types.
const std::vector<std::uint32_t>& admissible_alpha_values();
bool is_admissible_alpha(std::uint64_t a);
/// Largest alpha over all admissible types (measured, not assumed).
std::uint32_t max_alpha();

/// Genera of the n curve factors; every entry >= 2.
struct GenusVector {
    std::vector<std::uint32_t> genera;

    std::uint32_t n() const { return static_cast<std::uint32_t>(genera.size()); }

    friend bool operator==(const GenusVector& a, const GenusVector& b) {
        return a.genera == b.genera;
    }
    friend bool operator<(const GenusVector& a, const GenusVector& b) {
        return a.genera < b.genera;
    }
};

/// Solves 2(g - 1) = order * theta(A) for g; throws NonIntegralGenus
/// unless order * theta(A) is a positive even integer.
std::uint32_t genus_from_rh(std::uint32_t order, const RamType& A);

/// (-2)^n / order * prod(g_i - 1), exactly; throws NonIntegral when the
/// division leaves a remainder and Error if any genus is < 2.
std::int64_t euler_number(std::uint64_t order, const GenusVector& g);

/// Admissible types with alpha(A) = alpha_target, every entry in the given
/// element-order spectrum, and alpha_target dividing `order` (otherwise the
/// branching relation 2(g-1) = order * theta has no integer solution, so
/// the type cannot occur for this order).
std::vector<RamType> types_for(std::uint32_t order, std::uint32_t alpha_target,
                               const std::set<std::uint32_t>& element_orders);

}  // namespace prodquot
