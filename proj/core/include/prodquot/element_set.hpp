#pragma once

#include <cstdint>
#include <vector>

#include "prodquot/errors.hpp"

namespace prodquot {

/// Fixed-width bitset over the element indices of one group.
/// All binary operations require both operands to share a universe size.
class ElementSet {
public:
    ElementSet() : universe_(0) {}
    explicit ElementSet(std::uint32_t universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {}

    static ElementSet singleton(std::uint32_t universe, std::uint32_t i) {
        ElementSet s(universe);
        s.add(i);
        return s;
    }

    std::uint32_t universe_size() const { return universe_; }

    void add(std::uint32_t i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void remove(std::uint32_t i) { bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool contains(std::uint32_t i) const {
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (std::uint64_t w : bits_) c += static_cast<std::uint32_t>(__builtin_popcountll(w));
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    /// True iff the set is exactly {0} (index 0 is always the identity).
    bool is_identity_only() const {
        if (bits_.empty() || bits_[0] != 1) return false;
        for (std::size_t i = 1; i < bits_.size(); ++i)
            if (bits_[i]) return false;
        return true;
    }

    ElementSet& operator|=(const ElementSet& o) {
        check(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        check(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

    /// Ordering for use as a map key (universe first, then words).
    friend bool operator<(const ElementSet& a, const ElementSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        return a.bits_ < b.bits_;
    }

    bool is_subset_of(const ElementSet& o) const {
        check(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    /// Member indices in ascending order.
    std::vector<std::uint32_t> to_list() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::uint32_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                std::uint32_t bit = static_cast<std::uint32_t>(__builtin_ctzll(word));
                out.push_back((w << 6) | bit);
                word &= word - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return bits_; }

private:
    void check(const ElementSet& o) const {
        if (universe_ != o.universe_)
            throw Error("element sets belong to different groups");
    }

    std::uint32_t universe_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace prodquot
