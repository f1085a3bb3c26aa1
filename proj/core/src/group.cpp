#include "prodquot/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "prodquot/errors.hpp"

namespace prodquot {

std::string cycle_string(const Perm& p) {
    std::vector<bool> done(p.degree(), false);
    std::ostringstream out;
    bool any = false;
    for (std::uint32_t start = 0; start < p.degree(); ++start) {
        if (done[start] || p.img[start] == start) continue;
        any = true;
        out << '(';
        std::uint32_t x = start;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << x;
            done[x] = true;
            x = p.img[x];
            first = false;
        } while (x != start);
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Perm parse_cycles(const std::string& text, std::uint32_t degree) {
    Perm p = Perm::identity(degree);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool any_cycle = false;
    while (i < text.size()) {
        if (text[i] != '(') throw Error("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<std::uint32_t> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Error("expected point number in cycle notation: " + text);
            std::uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v >= degree)
                throw InvalidPermutation("point " + std::to_string(v) +
                                         " exceeds degree " + std::to_string(degree));
            if (used[v])
                throw InvalidPermutation("point " + std::to_string(v) +
                                         " appears twice in cycle notation");
            used[v] = true;
            cycle.push_back(static_cast<std::uint32_t>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw Error("unterminated cycle in: " + text);
        ++i;  // ')'
        any_cycle = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p.img[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!any_cycle) throw Error("no cycles found in: " + text);
    p.validate();
    return p;
}

PermGroup PermGroup::from_generators(std::uint32_t degree, std::vector<Perm> gens,
                                     std::uint32_t max_order) {
    if (max_order < 1) throw Error("max_order must be at least 1");
    const std::uint32_t cap = std::min(max_order, kHardCap);

    for (const Perm& g : gens) {
        if (g.degree() != degree)
            throw InvalidPermutation("generator degree " + std::to_string(g.degree()) +
                                     " does not match group degree " +
                                     std::to_string(degree));
        g.validate();
    }

    PermGroup G;
    G.degree_ = degree;
    G.gens_ = std::move(gens);

    Perm id = Perm::identity(degree);
    G.elements_.push_back(id);
    G.index_.emplace(id, 0);
    G.parent_.push_back(0);
    G.via_gen_.push_back(0);

    for (std::uint32_t head = 0; head < G.elements_.size(); ++head) {
        for (std::uint32_t gi = 0; gi < G.gens_.size(); ++gi) {
            Perm next = compose(G.elements_[head], G.gens_[gi]);
            if (G.index_.count(next)) continue;
            if (G.elements_.size() >= cap)
                throw OrderExceeded("group closure exceeds element cap " +
                                        std::to_string(cap),
                                    cap);
            std::uint32_t idx = static_cast<std::uint32_t>(G.elements_.size());
            G.index_.emplace(next, idx);
            G.elements_.push_back(std::move(next));
            G.parent_.push_back(head);
            G.via_gen_.push_back(gi);
        }
    }

    G.build_tables();
    G.build_classes();
    G.build_pcc();
    G.build_invariants();
    return G;
}

std::uint32_t PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error("permutation does not belong to this group");
    return it->second;
}

std::uint32_t PermGroup::mul_slow(std::uint32_t a, std::uint32_t b) const {
    return index_of(compose(elements_[a], elements_[b]));
}

std::uint32_t PermGroup::power(std::uint32_t g, std::int64_t k) const {
    const std::uint32_t o = element_orders_[g];
    std::int64_t e = k % o;
    if (e < 0) e += o;
    std::uint32_t acc = 0;
    for (std::int64_t i = 0; i < e; ++i) acc = mul(acc, g);
    return acc;
}

void PermGroup::build_tables() {
    const std::uint32_t n = order();

    if (n <= kMultTableLimit) {
        mult_.assign(std::size_t(n) * n, 0);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                mult_[std::size_t(a) * n + b] =
                    static_cast<std::uint16_t>(index_of(compose(elements_[a], elements_[b])));
    }

    inverse_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) inverse_[a] = index_of(inverse(elements_[a]));

    element_orders_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        std::uint32_t k = 1;
        std::uint32_t x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        element_orders_[a] = k;
        order_histogram_[k] += 1;
        by_order_[k].push_back(a);
    }
    for (const auto& [k, cnt] : order_histogram_) spectrum_.push_back(k);
}

const std::vector<std::uint32_t>& PermGroup::elements_of_order(std::uint32_t k) const {
    static const std::vector<std::uint32_t> kEmpty;
    auto it = by_order_.find(k);
    return it == by_order_.end() ? kEmpty : it->second;
}

void PermGroup::build_classes() {
    const std::uint32_t n = order();
    class_of_.assign(n, 0);
    std::vector<bool> seen(n, false);

    for (std::uint32_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // Orbit of `start` under conjugation; generators suffice since they
        // generate the whole group.
        std::vector<std::uint32_t> orbit{start};
        seen[start] = true;
        std::deque<std::uint32_t> queue{start};
        while (!queue.empty()) {
            std::uint32_t x = queue.front();
            queue.pop_front();
            for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
                std::uint32_t g = index_of(gens_[gi]);
                std::uint32_t y = conj(x, g);
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        std::uint32_t cls = static_cast<std::uint32_t>(classes_.size());
        for (std::uint32_t x : orbit) class_of_[x] = cls;
        classes_.push_back(std::move(orbit));
    }

    class_sets_.reserve(classes_.size());
    for (const auto& cls : classes_) {
        ElementSet s(n);
        for (std::uint32_t x : cls) s.add(x);
        class_sets_.push_back(std::move(s));
    }

    center_ = ElementSet(n);
    for (const auto& cls : classes_)
        if (cls.size() == 1) center_.add(cls[0]);
}

void PermGroup::build_pcc() {
    const std::uint32_t n = order();
    pcc_.reserve(n);
    for (std::uint32_t g = 0; g < n; ++g) {
        ElementSet s(n);
        std::uint32_t x = 0;  // g^0
        do {
            s |= class_sets_[class_of_[x]];
            x = mul(x, g);
        } while (x != 0);
        pcc_.push_back(std::move(s));
    }
}

ElementSet PermGroup::closure(const ElementSet& seed) const {
    if (seed.universe_size() != order())
        throw Error("element set belongs to a different group");
    // In a finite group, closing {1} under right multiplication by the seed
    // members yields the subgroup they generate (inverses are positive powers).
    return closure_of_elements(seed.to_list());
}

ElementSet PermGroup::closure_of_elements(const std::vector<std::uint32_t>& members) const {
    const std::uint32_t n = order();
    ElementSet sub(n);
    sub.add(0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t x = queue.front();
        queue.pop_front();
        for (std::uint32_t s : members) {
            std::uint32_t y = mul(x, s);
            if (!sub.contains(y)) {
                sub.add(y);
                queue.push_back(y);
            }
        }
    }
    return sub;
}

ElementSet PermGroup::full_set() const {
    ElementSet s(order());
    for (std::uint32_t i = 0; i < order(); ++i) s.add(i);
    return s;
}

void PermGroup::build_invariants() {
    const std::uint32_t n = order();

    // Derived subgroup: closure of all commutators.
    ElementSet comms(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            comms.add(mul(mul(inv(a), inv(b)), mul(a, b)));
    ElementSet derived = closure(comms);
    derived_order_ = derived.count();

    // Abelianization spectrum: element-order histogram of G/[G,G],
    // counting each coset once.
    std::vector<std::uint32_t> derived_members = derived.to_list();
    std::vector<bool> counted(n, false);
    for (std::uint32_t g = 0; g < n; ++g) {
        if (counted[g]) continue;
        for (std::uint32_t d : derived_members) counted[mul(g, d)] = true;
        std::uint32_t k = 1;
        std::uint32_t x = g;
        while (!derived.contains(x)) {
            x = mul(x, g);
            ++k;
        }
        abelianization_histogram_[k] += 1;
    }
}

}  // namespace prodquot
