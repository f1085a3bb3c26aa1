#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "prodquot/group.hpp"
#include "prodquot/ram_types.hpp"

namespace prodquot {

/// Union of power-conjugate closures; always contains the identity.
using SigmaSet = ElementSet;

/// An ordered tuple (h_1, ..., h_r) of group elements whose product is the
/// identity, whose entries generate the group, and whose order multiset
/// equals the branching signature `type`.
struct SphericalSystem {
    const PermGroup* group = nullptr;
    std::vector<std::uint32_t> elements;
    RamType type;
};

/// Union over the tuple entries of all conjugates of all their powers.
/// The identity is always a member, even for an empty tuple.
SigmaSet sigma(const PermGroup& G, const std::vector<std::uint32_t>& elements);
SigmaSet sigma(const SphericalSystem& T);

/// True iff the tuple's order multiset equals A.orders, its left-to-right
/// product is the identity, and its entries generate G.
bool is_valid_system(const PermGroup& G, const RamType& A,
                     const std::vector<std::uint32_t>& elements);

/// Visits every tuple accepted by is_valid_system(G, A, .) exactly once,
/// in a fixed deterministic order.  The order multiset may be realized in
/// any arrangement across the tuple positions.  The callback returns false
/// to stop early.  Returns the number of systems visited.
///
/// The walk fills positions left to right from per-order element buckets,
/// forcing the last entry to the inverse of the prefix product, so only
/// r-1 positions are searched.  Because the forced entry is a product of
/// the prefix, the tuple generates G exactly when the prefix does; that
/// single subgroup closure per completed prefix is the only generation
/// test needed.
std::uint64_t for_each_system(
    const PermGroup& G, const RamType& A,
    const std::function<bool(const std::vector<std::uint32_t>&)>& visit);

/// Collects the full enumeration of for_each_system.
std::vector<SphericalSystem> enumerate_systems(const PermGroup& G, const RamType& A);

/// True iff the intersection of the systems' sigma sets is exactly
/// {identity}.  Requires at least two systems, all on the same group.
bool is_free(const std::vector<SphericalSystem>& systems);

}  // namespace prodquot
