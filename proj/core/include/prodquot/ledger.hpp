#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodquot/ram_types.hpp"

namespace prodquot {

/// One arithmetic solution of the two primitive constraints
///   prod(alphas) = order^(n-1)   and   alpha_i * (g_i - 1) = order
/// with every alpha drawn from the admissible table and every implied
/// genus at least 3.  `alphas` is sorted ascending; `genera` is aligned
/// index-for-index with `alphas` (so it runs descending).
struct AlphaVector {
    std::uint32_t n = 0;
    std::uint64_t order = 0;
    std::vector<std::uint32_t> alphas;
    GenusVector genera;

    friend bool operator==(const AlphaVector& a, const AlphaVector& b) {
        return a.n == b.n && a.order == b.order && a.alphas == b.alphas;
    }
    friend bool operator<(const AlphaVector& a, const AlphaVector& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.alphas < b.alphas;
    }
};

/// A group order that survives pure arithmetic for a given dimension,
/// with every solution vector, its prime factorization, and a trail of
/// the arithmetic facts that shaped it.  `beyond_claim` marks orders the
/// claimed table under verification does not list.
struct OrderCandidate {
    std::uint64_t order = 0;
    std::uint32_t n = 0;
    std::vector<AlphaVector> vectors;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factorization;
    std::vector<std::string> trail;
    bool beyond_claim = false;
};

/// Largest dimension n compatible with a minimal factor genus.
/// floor 3: the raw inequality 2^(n-1) <= max alpha yields 7, refined one
/// step to 6 because n = 7 forces |G| = 2^7 whose only genus vector needs
/// alpha = 64, absent from the table.  floor 2: the inequality gives no
/// bound at all, reported as an empty optional.
std::optional<std::uint32_t> dimension_bound(std::uint32_t genus_floor);

/// Every AlphaVector for the given dimension (n in {4, 5, 6}), ordered by
/// (order, alphas).  Recomputed from the primitive constraints on every
/// call path, never transcribed.
const std::vector<AlphaVector>& alpha_vectors(std::uint32_t n);

/// alpha_vectors grouped per order (n in {4, 5}) with factorization and
/// trail attached; ordered by order.
std::vector<OrderCandidate> candidate_orders(std::uint32_t n);

/// All sorted genus vectors (g_1 <= ... <= g_n) with g_i >= floor and
/// prod(g_i - 1) = order.
std::vector<GenusVector> genus_vectors(std::uint64_t order, std::uint32_t n,
                                       std::uint32_t floor);

/// One verifiable statement of the dimension-six gate.
struct GateFact {
    std::string statement;
    bool holds = false;
};

/// Exact-arithmetic certificate that dimension 6 admits no candidate:
/// the order is pinned to [64, 203], a genus-3 factor is forced, and the
/// only orders whose genus-3 requirement meets the table (72, 80, 96,
/// 168) each die arithmetically.
struct N6GateReport {
    std::uint64_t min_order = 0;
    std::uint64_t max_order = 0;
    std::vector<std::uint64_t> genus3_orders;  ///< orders in range with admissible half-order alpha
    std::vector<GateFact> facts;
    bool holds = false;  ///< conjunction of all facts
};

N6GateReport n6_arithmetic_gate();

/// Per-order alpha multisets as claimed by the classification under
/// verification (n in {4, 5}).  The ledger recomputes its own table and
/// reports divergence from this one rather than suppressing it.
struct ClaimedVectors {
    std::uint64_t order;
    std::vector<std::vector<std::uint32_t>> alphas;
};
const std::vector<ClaimedVectors>& claimed_alpha_table(std::uint32_t n);

/// Difference between the recomputed table and the claimed one.
struct LedgerDivergence {
    /// Recomputed vectors the claim does not list (claim too narrow).
    std::vector<AlphaVector> beyond_claim;
    /// Claimed vectors the recomputation rejects (claim unsupported).
    std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> unconfirmed_claims;

    bool clean() const { return beyond_claim.empty() && unconfirmed_claims.empty(); }
};
LedgerDivergence compare_with_claim(std::uint32_t n);

}  // namespace prodquot
