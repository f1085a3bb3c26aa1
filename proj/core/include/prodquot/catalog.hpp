#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodquot/group.hpp"

namespace prodquot {

/// Realization source: permutation generators over a stated degree.
struct PermSource {
    std::uint32_t degree = 0;
    std::vector<std::string> generator_lines;  ///< disjoint-cycle notation
};

/// Realization source: presentation text for coset enumeration.
struct PresSource {
    std::string text;
};

/// One catalog entry: a named group, its declared order, exactly one
/// realization source, and free-form labels.
struct GroupDef {
    std::string name;
    std::uint64_t declared_order = 0;
    std::optional<PermSource> perm;
    std::optional<PresSource> pres;
    std::vector<std::string> tags;
    /// Content hash of the realization source (name excluded), filled at
    /// load time; the cache file is addressed by this value.
    std::string source_hash;
};

struct CatalogManifest {
    std::string path;
    std::vector<GroupDef> groups;  ///< file order
    std::map<std::uint64_t, std::uint32_t> expected_counts;
};

enum class OrderStatus { PASS, WARN };

struct OrderCompleteness {
    std::uint64_t order = 0;
    std::optional<std::uint32_t> expected;  ///< absent when the file declares no target
    std::uint32_t actual = 0;
    bool pairwise_distinct = false;
    /// Entry pairs proved isomorphic — genuine duplicates.
    std::vector<std::pair<std::string, std::string>> collisions;
    OrderStatus status = OrderStatus::WARN;
};

struct CompletenessReport {
    std::vector<OrderCompleteness> rows;  ///< one per queried order, query order
    bool all_pass = true;                 ///< vacuously true for an empty query
};

/// A parsed and fully realized catalog.  Loading builds every entry, checks
/// each realized order against its declaration, and maintains a per-entry
/// on-disk cache addressed by the source hash.
///
/// File format (line oriented, UTF-8, "#" starts a comment):
///   expect order <k> count <c>
///   group <name> order <k>
///   tags <label> [<label> ...]          (optional, after the group line)
///   perm degree <d>                     followed by one generator per line
///   (0 1 2)(3 4)                        in disjoint-cycle notation, or
///   pres                                followed by one line of
///   < x, y | x^4, ... >                 presentation text.
class Catalog {
public:
    /// Throws ParseError on malformed text, DuplicateName on a repeated
    /// group name, OrderMismatch when a realization disagrees with its
    /// declaration.  Cache entries live under IPV_CACHE_DIR or, when that
    /// is unset, "<catalog dir>/.ipv-cache"; a corrupt entry is rebuilt
    /// from source and rewritten, never surfaced to the caller.
    static Catalog load(const std::string& path);

    const CatalogManifest& manifest() const { return manifest_; }

    /// The realized group for a manifest entry.  Throws UnknownGroup.
    const PermGroup& group(const std::string& name) const;
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    std::vector<std::string> names() const;  ///< file order
    std::vector<std::string> names_for_order(std::uint64_t order) const;

    /// PASS for an order iff the entry count equals the declared target and
    /// the entries are pairwise non-isomorphic.  Cheap invariants (element
    /// orders, class sizes, abelianization, derived subgroup order, centre
    /// size) prefilter the pairs; pairs they cannot separate get the exact
    /// isomorphism test, so every reported collision is a genuine
    /// duplicate.  Orders with no declared target WARN.
    CompletenessReport completeness(const std::vector<std::uint64_t>& orders) const;

private:
    CatalogManifest manifest_;
    std::vector<std::unique_ptr<PermGroup>> realized_;  ///< aligned with groups
    std::map<std::string, std::size_t> index_;
};

inline Catalog load_catalog(const std::string& path) { return Catalog::load(path); }

}  // namespace prodquot
