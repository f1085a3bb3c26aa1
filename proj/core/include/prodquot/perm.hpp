#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prodquot/errors.hpp"

namespace prodquot {

/// A permutation of {0, ..., degree-1}, stored as its image table.
/// Composition is left-to-right: (a * b) maps x to b[a[x]].
struct Perm {
    std::vector<std::uint32_t> img;

    Perm() = default;
    explicit Perm(std::vector<std::uint32_t> images) : img(std::move(images)) {}

    static Perm identity(std::uint32_t degree) {
        Perm p;
        p.img.resize(degree);
        for (std::uint32_t i = 0; i < degree; ++i) p.img[i] = i;
        return p;
    }

    std::uint32_t degree() const { return static_cast<std::uint32_t>(img.size()); }

    std::uint32_t apply(std::uint32_t x) const { return img[x]; }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < img.size(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    /// Throws InvalidPermutation unless the image table is a bijection
    /// on {0, ..., degree-1}.
    void validate() const {
        std::vector<bool> seen(img.size(), false);
        for (std::uint32_t v : img) {
            if (v >= img.size() || seen[v])
                throw InvalidPermutation("image table is not a bijection on its points");
            seen[v] = true;
        }
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

/// a then b: the permutation mapping x to b[a[x]].
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (std::uint32_t x = 0; x < a.img.size(); ++x) r.img[x] = b.img[a.img[x]];
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r;
    r.img.resize(a.img.size());
    for (std::uint32_t x = 0; x < a.img.size(); ++x) r.img[a.img[x]] = x;
    return r;
}

/// Disjoint-cycle rendering, e.g. "(0 1 2)(3 4)"; identity prints "()".
std::string cycle_string(const Perm& p);

/// Parses disjoint-cycle notation over {0, ..., degree-1}.
/// Fixed points may be omitted.  Throws Error on malformed input and
/// InvalidPermutation if a point repeats or exceeds the degree.
Perm parse_cycles(const std::string& text, std::uint32_t degree);

}  // namespace prodquot
