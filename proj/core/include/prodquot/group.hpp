#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "prodquot/element_set.hpp"
#include "prodquot/perm.hpp"

namespace prodquot {

/// A finite group realized by permutation generators.
///
/// Elements are indexed by breadth-first discovery order: index 0 is the
/// identity; the queue is processed in order and each element is
/// right-multiplied by the generators in their given order, so rebuilding
/// from identical generators always yields identical indexing.
/// Instances are immutable after construction and safe to share across
/// threads.
class PermGroup {
public:
    /// Breadth-first closure of the generators.  Throws InvalidPermutation
    /// for malformed generators and OrderExceeded once the element count
    /// passes min(max_order, kHardCap).
    static PermGroup from_generators(std::uint32_t degree, std::vector<Perm> gens,
                                     std::uint32_t max_order = kDefaultMaxOrder);

    static constexpr std::uint32_t kDefaultMaxOrder = 256;
    static constexpr std::uint32_t kHardCap = 4096;
    /// Orders at or below this threshold precompute the full
    /// multiplication table; larger groups compose permutations on demand.
    static constexpr std::uint32_t kMultTableLimit = 256;

    std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
    std::uint32_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const Perm& element(std::uint32_t i) const { return elements_[i]; }

    /// Index of a permutation that is known to lie in the group.
    /// Throws Error if it does not.
    std::uint32_t index_of(const Perm& p) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mult_.empty()) return mult_[std::size_t(a) * order() + b];
        return mul_slow(a, b);
    }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t conj(std::uint32_t g, std::uint32_t by) const {
        return mul(mul(inv(by), g), by);
    }
    /// g raised to an arbitrary integer power.
    std::uint32_t power(std::uint32_t g, std::int64_t k) const;

    std::uint32_t element_order(std::uint32_t g) const { return element_orders_[g]; }

    /// Sorted distinct element orders (always starts with 1).
    const std::vector<std::uint32_t>& order_spectrum() const { return spectrum_; }
    /// Element count for each order in the spectrum.
    const std::map<std::uint32_t, std::uint32_t>& order_histogram() const {
        return order_histogram_;
    }
    bool has_element_of_order(std::uint32_t k) const {
        return order_histogram_.count(k) != 0;
    }
    /// Ascending indices of all elements of the given order.
    const std::vector<std::uint32_t>& elements_of_order(std::uint32_t k) const;

    /// Conjugacy classes ordered by least member index; each class lists
    /// its members in ascending order.  Class 0 is {identity}.
    const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const {
        return classes_;
    }
    std::uint32_t class_index(std::uint32_t g) const { return class_of_[g]; }
    const ElementSet& class_set(std::uint32_t class_idx) const {
        return class_sets_[class_idx];
    }

    const ElementSet& center() const { return center_; }

    /// Smallest subgroup containing the given elements.
    ElementSet closure(const ElementSet& seed) const;
    /// Same, from an explicit member list (the tuple enumerator's hot path:
    /// cost scales with the list length, not the subgroup size).
    ElementSet closure_of_elements(const std::vector<std::uint32_t>& members) const;
    bool is_generating(const ElementSet& seed) const {
        return closure(seed).count() == order();
    }

    /// All conjugates of all powers of g (the fixed-point set contribution
    /// of an element); contains the identity.
    const ElementSet& power_conjugate_closure(std::uint32_t g) const { return pcc_[g]; }

    /// Whole group as an ElementSet.
    ElementSet full_set() const;

    /// Breadth-first construction trace: element i (> 0) was first reached
    /// as mul(parent_of[i], gens[gen_of[i]]).  Used by the catalog cache.
    const std::vector<std::uint32_t>& parent_of() const { return parent_; }
    const std::vector<std::uint32_t>& gen_of() const { return via_gen_; }

    // -- Cheap isomorphism invariants (catalog completeness support) --

    /// Order of the derived subgroup.
    std::uint32_t derived_subgroup_order() const { return derived_order_; }
    /// Element-order histogram of the abelianization G/[G,G].
    const std::map<std::uint32_t, std::uint32_t>& abelianization_histogram() const {
        return abelianization_histogram_;
    }

private:
    PermGroup() = default;

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    void build_tables();
    void build_classes();
    void build_pcc();
    void build_invariants();

    struct PermHash {
        std::size_t operator()(const Perm& p) const {
            std::size_t h = 1469598103934665603ull;
            for (std::uint32_t v : p.img) {
                h ^= v;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    std::uint32_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
    std::unordered_map<Perm, std::uint32_t, PermHash> index_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> via_gen_;
    std::vector<std::uint16_t> mult_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> element_orders_;
    std::vector<std::uint32_t> spectrum_;
    std::map<std::uint32_t, std::uint32_t> order_histogram_;
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_order_;
    std::vector<std::vector<std::uint32_t>> classes_;
    std::vector<ElementSet> class_sets_;
    std::vector<std::uint32_t> class_of_;
    ElementSet center_;
    std::vector<ElementSet> pcc_;
    std::uint32_t derived_order_ = 1;
    std::map<std::uint32_t, std::uint32_t> abelianization_histogram_;
};

}  // namespace prodquot
