#pragma once

#include <cstdint>
#include <vector>

#include "prodquot/group.hpp"
#include "prodquot/ram_types.hpp"

namespace prodquot::oracle {

/// Subgroup closure by repeated full multiplication until stable —
/// independent of the library's breadth-first implementation.
ElementSet naive_closure(const PermGroup& G, const std::vector<std::uint32_t>& seed);

/// Conjugacy class of g by scanning every conjugator.
std::vector<std::uint32_t> naive_class_of(const PermGroup& G, std::uint32_t g);

/// Direct scan over (entry j, power k, conjugator c): is s a conjugate of
/// a power of some tuple entry?
bool naive_sigma_member(const PermGroup& G, const std::vector<std::uint32_t>& tuple,
                        std::uint32_t s);

/// Membership in the conjugate-power set of a single element g.
bool naive_pcc_member(const PermGroup& G, std::uint32_t g, std::uint32_t s);

/// Counts ordered tuples (h_1, ..., h_r) whose order multiset equals the
/// type, whose product is the identity, and which generate the group.
/// `literal` walks the full |G|^r odometer with no skips; otherwise
/// positions whose element order cannot fit the remaining multiset are
/// skipped (the same predicate, short-circuited per prefix).
std::uint64_t naive_system_count(const PermGroup& G, const RamType& type, bool literal);

/// Every multiset of n values from the admissible-alpha table whose
/// product is order^(n-1) and whose genera 1 + order/alpha are >= 3.
std::vector<std::vector<std::uint32_t>> naive_alpha_multisets(std::uint32_t order,
                                                              std::uint32_t n);

}  // namespace prodquot::oracle
