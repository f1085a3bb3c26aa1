#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prodquot/element_set.hpp"
#include "prodquot/group.hpp"
#include "prodquot/ram_types.hpp"
#include "prodquot/spherical.hpp"

namespace prodquot {

/// A complete existence witness: n spherical systems on one group, the
/// genus of each curve factor recovered from the branching relation, the
/// product of the shifted genera equal to the group order, and the Euler
/// number of the quotient equal to (-2)^n.
struct StructureCandidate {
    const PermGroup* group = nullptr;
    std::uint32_t n = 0;
    std::vector<SphericalSystem> systems;  ///< aligned with genera
    GenusVector genera;                    ///< ascending
    std::int64_t euler = 0;
};

enum class SearchOutcome { Empty, Witness };

/// Work counters for one search run.  genus_vectors and type_assignments
/// describe the full deterministic task space (independent of early exit);
/// systems_enumerated and sigma_tests cover exactly the tasks up to and
/// including the one that produced the witness, so every field except
/// wall_seconds is a pure function of (group, n, floor, options) and in
/// particular independent of the thread count.
struct SearchStats {
    std::uint64_t genus_vectors = 0;      ///< genus vectors with the right product
    std::uint64_t type_assignments = 0;   ///< (genus vector, per-slot type) tasks
    std::uint64_t systems_enumerated = 0; ///< tuples produced by the enumerator
    std::uint64_t sigma_tests = 0;        ///< set intersections during assembly
    double wall_seconds = 0.0;
};

struct SearchReport {
    std::string group_name;
    std::uint32_t n = 0;
    SearchOutcome outcome = SearchOutcome::Empty;
    SearchStats stats;
    std::optional<StructureCandidate> witness;
};

struct SearchOptions {
    /// Worker threads over (genus vector, type assignment) tasks.  The
    /// outcome, witness, and all counters except wall time are identical
    /// for every thread count.
    std::uint32_t threads = 1;
    /// Name stamped into the report; defaults to "order <k>".
    std::string label;
    /// Collapse systems sharing one fixed-point set before tuple assembly.
    /// Sound for emptiness and for witnesses (any representative passes);
    /// turning it off makes the assembly walk every raw combination.
    bool dedup = true;
};

/// Exhaustive scan for n systems realizing Euler number (-2)^n with first
/// Betti number zero: every genus vector with product of (g_i - 1) equal
/// to |G| and every slot genus >= require_genus_ge, every compatible
/// assignment of admissible branching types (alpha = |G|/(g_i - 1)), every
/// tuple of systems, tested for the trivial-intersection condition.
/// Returns Empty or the first witness in a fixed deterministic task order.
/// Requires n >= 2 and require_genus_ge in {2, 3}.
SearchReport search_structures(const PermGroup& G, std::uint32_t n,
                               std::uint32_t require_genus_ge = 3,
                               const SearchOptions& opts = {});

/// Same scan with the running intersection seeded from an external set:
/// a witness certifies seed intersect (union-free) sigma-intersection of
/// the systems == {identity}.  Accepts n >= 1.  Witnesses of the seeded
/// scan certify the seeded condition only and need not pass
/// verify_candidate (whose freeness test uses no seed).
SearchReport search_structures_seeded(const PermGroup& G, std::uint32_t n,
                                      std::uint32_t require_genus_ge,
                                      const ElementSet& seed,
                                      const SearchOptions& opts = {});

/// Independent re-validation of every invariant from scratch: each system
/// valid on the group (product, orders, generation), admissible type,
/// genus recovered from the branching relation, product of shifted genera
/// equal to the group order, Euler number (-2)^n, and the sigma
/// intersection of all systems exactly {identity}.  Shares no state with
/// the search.
bool verify_candidate(const StructureCandidate& c);

}  // namespace prodquot
