#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "prodquot/group.hpp"
#include "prodquot/perm.hpp"

namespace prodquot::build {

inline Perm identity_perm(std::uint32_t degree) {
    Perm p;
    p.img.resize(degree);
    std::iota(p.img.begin(), p.img.end(), 0u);
    return p;
}

/// Single n-cycle on points 0..n-1 inside a permutation of width `degree`,
/// shifted to start at `base`.
inline Perm cycle_at(std::uint32_t degree, std::uint32_t base, std::uint32_t n) {
    Perm p = identity_perm(degree);
    for (std::uint32_t i = 0; i < n; ++i) p.img[base + i] = base + (i + 1) % n;
    return p;
}

inline PermGroup cyclic(std::uint32_t n) {
    return PermGroup::from_generators(n, {cycle_at(n, 0, n)}, n);
}

/// Dihedral group of order 2n acting on the n vertices of a polygon.
inline PermGroup dihedral(std::uint32_t n) {
    Perm r = cycle_at(n, 0, n);
    Perm s = identity_perm(n);
    for (std::uint32_t i = 0; i < n; ++i) s.img[i] = (n - i) % n;
    return PermGroup::from_generators(n, {r, s}, 2 * n);
}

inline PermGroup klein() {
    Perm a = identity_perm(4), b = identity_perm(4);
    a.img = {1, 0, 3, 2};
    b.img = {2, 3, 0, 1};
    return PermGroup::from_generators(4, {a, b}, 4);
}

/// Direct product of cyclic groups on disjoint point blocks.
inline PermGroup product_of_cycles(const std::vector<std::uint32_t>& ns) {
    std::uint32_t degree = 0;
    for (std::uint32_t n : ns) degree += n;
    std::vector<Perm> gens;
    std::uint32_t base = 0;
    std::uint32_t order = 1;
    for (std::uint32_t n : ns) {
        gens.push_back(cycle_at(degree, base, n));
        base += n;
        order *= n;
    }
    return PermGroup::from_generators(degree, gens, order);
}

inline PermGroup z4xz4() { return product_of_cycles({4, 4}); }

/// Quaternion group of order 8 via left multiplication on
/// {1, i, -1, -i, j, -j, k, -k}.
inline PermGroup quaternion8() {
    Perm li, lj;
    li.img = {1, 2, 3, 0, 6, 7, 5, 4};
    lj.img = {4, 7, 5, 6, 2, 0, 1, 3};
    return PermGroup::from_generators(8, {li, lj}, 8);
}

/// 2x2 matrices of determinant 1 over the field with three elements,
/// acting on the eight nonzero column vectors ordered
/// (1,0),(2,0),(0,1),(0,2),(1,1),(2,2),(1,2),(2,1).
inline PermGroup sl23() {
    Perm shear, rot;
    shear.img = {0, 1, 4, 5, 7, 6, 3, 2};  // (x,y) -> (x+y, y)
    rot.img = {2, 3, 1, 0, 7, 6, 4, 5};    // (x,y) -> (2y, x)
    return PermGroup::from_generators(8, {shear, rot}, 24);
}

/// All invertible 2x2 matrices over the field with three elements, same
/// action and vector ordering as sl23().
inline PermGroup gl23() {
    Perm shear, rot, diag;
    shear.img = {0, 1, 4, 5, 7, 6, 3, 2};
    rot.img = {2, 3, 1, 0, 7, 6, 4, 5};
    diag.img = {0, 1, 3, 2, 6, 7, 4, 5};  // (x,y) -> (x, 2y)
    return PermGroup::from_generators(8, {shear, rot, diag}, 48);
}

inline PermGroup a4() {
    Perm t, v;
    t.img = {1, 2, 0, 3};
    v.img = {1, 0, 3, 2};
    return PermGroup::from_generators(4, {t, v}, 12);
}

inline PermGroup s4() {
    Perm c4, t;
    c4.img = {1, 2, 3, 0};
    t.img = {1, 0, 2, 3};
    return PermGroup::from_generators(4, {c4, t}, 24);
}

inline PermGroup a5() {
    Perm c5, c3;
    c5.img = {1, 2, 3, 4, 0};
    c3.img = {0, 1, 3, 4, 2};
    return PermGroup::from_generators(5, {c5, c3}, 60);
}

/// Fractional-linear action of the simple group of order 168 on the
/// projective line over the field with seven elements; points are
/// 0..6 followed by the point at infinity.
inline PermGroup psl27() {
    Perm shift, inv;
    shift.img = {1, 2, 3, 4, 5, 6, 0, 7};              // z -> z+1
    inv.img = {7, 6, 3, 2, 5, 4, 1, 0};                // z -> -1/z
    return PermGroup::from_generators(8, {shift, inv}, 168);
}

inline PermGroup elementary_abelian_2(std::uint32_t k) {
    std::vector<std::uint32_t> ns(k, 2);
    return product_of_cycles(ns);
}

inline PermGroup z5xz5() { return product_of_cycles({5, 5}); }

}  // namespace prodquot::build
