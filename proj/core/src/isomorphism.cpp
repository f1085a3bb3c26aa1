#include "prodquot/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "prodquot/errors.hpp"

namespace prodquot {
namespace {

// --------------------------------------------------------- class labelling
//
// Joint refinement of conjugacy-class labels for a pair of groups (A, B).
// Classes start labelled by (size, element order) and are refined by the
// labels of their prime-power classes until stable, with both groups ranked
// in one pool so equal labels mean equal refinement signatures.  Used to
// restrict candidate generator images during the backtracking search and as
// a cheap non-isomorphism test.

struct JointLabels {
    bool compatible = false;       // label spectra agree between A and B
    std::vector<std::uint32_t> a;  // per-class labels of A
    std::vector<std::uint32_t> b;  // per-class labels of B
};

std::uint32_t power_class(const PermGroup& g, std::uint32_t class_idx,
                          std::uint32_t k) {
    std::uint32_t rep = g.conjugacy_classes()[class_idx].front();
    return g.class_index(g.power(rep, k));
}

JointLabels joint_labels(const PermGroup& A, const PermGroup& B) {
    const std::size_t ca = A.conjugacy_classes().size();
    const std::size_t cb = B.conjugacy_classes().size();
    JointLabels out;
    if (ca != cb) return out;

    using Sig = std::vector<std::uint32_t>;
    std::vector<std::uint32_t> lab(ca + cb, 0);

    auto group_of = [&](std::size_t i) -> const PermGroup& { return i < ca ? A : B; };
    auto class_of = [&](std::size_t i) { return i < ca ? i : i - ca; };

    std::size_t distinct = 1;
    static const std::uint32_t kPowers[] = {2, 3, 5, 7};
    for (int round = 0; round < 12; ++round) {
        std::vector<Sig> sigs(ca + cb);
        for (std::size_t i = 0; i < ca + cb; ++i) {
            const PermGroup& g = group_of(i);
            const std::size_t c = class_of(i);
            Sig s;
            s.push_back(lab[i]);
            s.push_back(static_cast<std::uint32_t>(g.conjugacy_classes()[c].size()));
            s.push_back(g.element_order(g.conjugacy_classes()[c].front()));
            for (std::uint32_t k : kPowers) {
                std::size_t pc = power_class(g, static_cast<std::uint32_t>(c), k);
                s.push_back(lab[i < ca ? pc : pc + ca]);
            }
            sigs[i] = std::move(s);
        }
        std::vector<Sig> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < ca + cb; ++i)
            lab[i] = static_cast<std::uint32_t>(
                std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
        if (sorted.size() == distinct) break;
        distinct = sorted.size();
    }

    // Label spectra must agree (with multiplicity) for A ~ B to be possible.
    std::vector<std::uint32_t> la(lab.begin(), lab.begin() + ca);
    std::vector<std::uint32_t> lb(lab.begin() + ca, lab.end());
    std::vector<std::uint32_t> sa = la, sb = lb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return out;
    out.compatible = true;
    out.a = std::move(la);
    out.b = std::move(lb);
    return out;
}

// Per-element labels derived from per-class labels.
std::vector<std::uint32_t> element_labels(const PermGroup& g,
                                          const std::vector<std::uint32_t>& class_lab) {
    std::vector<std::uint32_t> out(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x) out[x] = class_lab[g.class_index(x)];
    return out;
}

// ------------------------------------------------------- generating chains
//
// A generating sequence with, per level, the breadth-first definitions of
// the new subgroup elements (each as earlier-element * generator) plus the
// member lists needed for the homomorphism consistency checks.

struct Chain {
    struct Def {
        std::uint32_t elem, prev, gen;  // elem = mul(prev, seq[gen])
    };
    std::vector<std::uint32_t> seq;
    std::vector<std::vector<Def>> defs;                    // per level, excludes seq[l]
    std::vector<std::vector<std::uint32_t>> prev_members;  // members before level l
    std::vector<std::vector<std::uint32_t>> new_members;   // seq[l] + defs[l] elems
};

Chain build_chain(const PermGroup& g, const std::vector<std::uint32_t>& elem_lab) {
    // Candidate-count per label, to pick generators with few possible images.
    std::map<std::uint32_t, std::uint32_t> lab_count;
    for (std::uint32_t x = 0; x < g.order(); ++x) ++lab_count[elem_lab[x]];

    Chain ch;
    std::vector<char> in(g.order(), 0);
    std::vector<std::uint32_t> members{0};
    in[0] = 1;
    while (members.size() < g.order()) {
        std::uint32_t best = 0;
        std::uint32_t best_count = UINT32_MAX;
        for (std::uint32_t x = 1; x < g.order(); ++x)
            if (!in[x] && lab_count[elem_lab[x]] < best_count) {
                best = x;
                best_count = lab_count[elem_lab[x]];
            }
        const std::uint32_t level = static_cast<std::uint32_t>(ch.seq.size());
        ch.prev_members.push_back(members);
        ch.seq.push_back(best);

        std::vector<Chain::Def> defs;
        std::vector<std::uint32_t> fresh{best};
        in[best] = 1;
        members.push_back(best);
        for (std::size_t qi = 0; qi < members.size(); ++qi) {
            const std::uint32_t x = members[qi];
            for (std::uint32_t k = 0; k <= level; ++k) {
                const std::uint32_t y = g.mul(x, ch.seq[k]);
                if (!in[y]) {
                    in[y] = 1;
                    defs.push_back({y, x, k});
                    members.push_back(y);
                    fresh.push_back(y);
                }
            }
        }
        ch.defs.push_back(std::move(defs));
        ch.new_members.push_back(std::move(fresh));
    }
    return ch;
}

// ------------------------------------------------- backtracking over images
//
// Searches injective homomorphisms A -> B extending images of A's chain
// generators; |A| == |B| makes every hit an isomorphism.  The consistency
// check at each level verifies img(x*g) == img(x)*img(g) for every pair not
// covered at earlier levels, which certifies the leaf maps exactly.

struct HomSearch {
    const PermGroup& A;
    const PermGroup& B;
    const Chain& ch;
    std::vector<std::vector<std::uint32_t>> cand;  // per level, ascending

    std::vector<std::uint32_t> img;
    std::vector<char> used;
    std::vector<std::vector<std::uint32_t>> trail;  // per level: elems set

    HomSearch(const PermGroup& a, const PermGroup& b, const Chain& c,
              const std::vector<std::uint32_t>& lab_a,
              const std::vector<std::uint32_t>& lab_b)
        : A(a), B(b), ch(c) {
        img.assign(A.order(), UINT32_MAX);
        used.assign(B.order(), 0);
        img[0] = 0;
        used[0] = 1;
        trail.resize(ch.seq.size());
        cand.resize(ch.seq.size());
        for (std::size_t l = 0; l < ch.seq.size(); ++l)
            for (std::uint32_t y = 0; y < B.order(); ++y)
                if (lab_b[y] == lab_a[ch.seq[l]]) cand[l].push_back(y);
    }

    bool place(std::uint32_t l, std::uint32_t c) {
        auto& tr = trail[l];
        tr.clear();
        auto set = [&](std::uint32_t e, std::uint32_t v) -> bool {
            if (used[v]) return false;
            img[e] = v;
            used[v] = 1;
            tr.push_back(e);
            return true;
        };
        if (!set(ch.seq[l], c)) return false;
        for (const Chain::Def& d : ch.defs[l]) {
            const std::uint32_t v = B.mul(img[d.prev], img[ch.seq[d.gen]]);
            if (!set(d.elem, v)) {
                rollback(l);
                return false;
            }
        }
        // excess consistency: new x old/new gens, old x new gen
        for (std::uint32_t x : ch.new_members[l])
            for (std::uint32_t k = 0; k <= l; ++k)
                if (img[A.mul(x, ch.seq[k])] != B.mul(img[x], img[ch.seq[k]])) {
                    rollback(l);
                    return false;
                }
        for (std::uint32_t x : ch.prev_members[l])
            if (img[A.mul(x, ch.seq[l])] != B.mul(img[x], c)) {
                rollback(l);
                return false;
            }
        return true;
    }

    void rollback(std::uint32_t l) {
        for (std::uint32_t e : trail[l]) {
            used[img[e]] = 0;
            img[e] = UINT32_MAX;
        }
        trail[l].clear();
    }

    // leaf(img) returns false to stop the whole search.
    template <class F>
    bool recurse(std::uint32_t l, F&& leaf) {
        if (l == ch.seq.size()) return leaf(img);
        for (std::uint32_t c : cand[l]) {
            if (!place(l, c)) continue;
            const bool keep = recurse(l + 1, leaf);
            rollback(l);
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

bool are_isomorphic(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    if (a.order_histogram() != b.order_histogram()) return false;
    JointLabels jl = joint_labels(a, b);
    if (!jl.compatible) return false;
    std::vector<std::uint32_t> la = element_labels(a, jl.a);
    std::vector<std::uint32_t> lb = element_labels(b, jl.b);
    Chain ch = build_chain(a, la);
    HomSearch hs(a, b, ch, la, lb);
    bool found = false;
    hs.recurse(0, [&](const ElementMap&) {
        found = true;
        return false;  // stop at the first witness
    });
    return found;
}

std::vector<ElementMap> automorphisms(const PermGroup& g, std::size_t limit) {
    JointLabels jl = joint_labels(g, g);
    // A group is always compatible with itself.
    std::vector<std::uint32_t> lab = element_labels(g, jl.a);
    Chain ch = build_chain(g, lab);
    HomSearch hs(g, g, ch, lab, lab);
    std::vector<ElementMap> out;
    bool overflow = false;
    hs.recurse(0, [&](const ElementMap& img) {
        if (out.size() >= limit) {
            overflow = true;
            return false;
        }
        out.push_back(img);
        return true;
    });
    if (overflow) throw Error("automorphism enumeration exceeded the requested limit");
    return out;
}

}  // namespace prodquot
