#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prodquot/group.hpp"

namespace prodquot {

/// A bijection on element indices, as a flat image table: m[x] is the image
/// of element x.  Used both for automorphisms of one group and isomorphisms
/// between two groups of equal order.
using ElementMap = std::vector<std::uint32_t>;

/// Exact isomorphism test between two finite groups.
///
/// Conjugacy classes of both groups are refined jointly by class size,
/// element order and the classes of prime-power maps until stable; a label
/// mismatch settles non-isomorphism immediately.  Otherwise generator images
/// are searched by backtracking over a short generating chain of `a`,
/// propagating images breadth-first and checking multiplicativity on every
/// product not forced by a definition.  A positive answer is therefore
/// certified by an explicit isomorphism, a negative one by exhaustion.
bool are_isomorphic(const PermGroup& a, const PermGroup& b);

/// All automorphisms of g, as element-index maps (bijections m fixing the
/// identity with m[mul(x,y)] == mul(m[x], m[y]) throughout).  Throws Error
/// if more than `limit` maps are found (a safety valve for misuse on huge
/// automorphism groups).
std::vector<ElementMap> automorphisms(const PermGroup& g,
                                      std::size_t limit = 10'000'000);

}  // namespace prodquot
