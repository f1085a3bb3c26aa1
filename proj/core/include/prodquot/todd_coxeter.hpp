#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prodquot/perm.hpp"
#include "prodquot/presentation.hpp"

namespace prodquot {

/// Action table of the cosets of the trivial subgroup.  Column 2g holds the
/// image of each coset under generator g, column 2g+1 the image under its
/// inverse; -1 marks an undefined entry (only possible in a partial table).
struct CosetTable {
    std::uint32_t generator_count = 0;
    std::vector<std::vector<std::int32_t>> rows;
    std::uint32_t live_cosets = 0;

    /// True when every entry is defined and in range.
    bool closed() const;
};

inline constexpr std::uint32_t kDefaultMaxCosets = 10000;

/// Coset enumeration over the trivial subgroup: relator scanning with
/// immediate coincidence handling and deterministic coset numbering (new
/// cosets are created in scanning order, then compressed to 0..n-1).
/// Returns a closed table whose live-coset count is the group order.
/// Throws CosetLimitExceeded when more than max_cosets cosets would be
/// created (the group may be infinite, or the limit too small).
CosetTable todd_coxeter(const Presentation& P,
                        std::uint32_t max_cosets = kDefaultMaxCosets);

/// The regular permutation representation read off a closed table: degree =
/// live-coset count, one permutation per generator (column action).  Throws
/// TableNotClosed on a partial table.
std::pair<std::uint32_t, std::vector<Perm>> permutation_rep(const CosetTable& T);

}  // namespace prodquot
