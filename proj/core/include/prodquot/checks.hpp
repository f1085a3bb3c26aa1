#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prodquot {

/// Outcome classification for a registered verification check.
///
/// Pass         every asserted fact was recomputed and holds.
/// Fail         at least one asserted fact is contradicted by computation.
/// Conditional  a required group catalog is missing or fails its
///              completeness gate, so the check could not be discharged;
///              nothing was contradicted.
enum class CheckStatus { Pass, Fail, Conditional };

const char* to_string(CheckStatus s);

/// Result of one check run.  `details` is an ordered list of finding
/// lines; everything except `seconds` is a deterministic function of the
/// inputs, so two runs over the same data differ only in timing.
struct CheckResult {
    std::string id;  ///< resolved primary id
    CheckStatus status = CheckStatus::Fail;
    std::vector<std::string> details;
    double seconds = 0.0;
};

struct CheckOptions {
    /// Directory holding named.cat and the per-order oNNN.cat files.
    /// Checks that need no catalog ignore it; catalog-backed checks report
    /// Conditional when it is empty or a required file is absent.
    std::string catalog_dir;
    /// Dimension for dimension-parameterized checks.  Those checks run
    /// every supported dimension (4 and 5) when unset.  Setting it on a
    /// check that takes no dimension is an error.
    std::optional<std::uint32_t> n;
    /// Worker threads handed to the underlying searches.
    std::uint32_t threads = 1;
};

/// Primary check ids in documentation order.
std::vector<std::string> check_ids();

/// Accepted alternate spellings, each mapped to its primary id.
std::vector<std::pair<std::string, std::string>> check_aliases();

/// One-line functional description of a check.  Throws UnknownCheck.
std::string check_title(const std::string& id);

/// True iff the check accepts the dimension option.
bool check_accepts_dimension(const std::string& id);

/// Runs one check by primary id or alias.  Throws UnknownCheck for an
/// unregistered id and Error for an out-of-range dimension; catalog
/// problems surface as status Conditional, never as exceptions.
CheckResult run_check(const std::string& id, const CheckOptions& opts);

}  // namespace prodquot
