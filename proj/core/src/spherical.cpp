#include "prodquot/spherical.hpp"

#include <algorithm>

#include "prodquot/errors.hpp"

namespace prodquot {

SigmaSet sigma(const PermGroup& G, const std::vector<std::uint32_t>& elements) {
    ElementSet s(G.order());
    s.add(0);
    for (std::uint32_t h : elements) s |= G.power_conjugate_closure(h);
    return s;
}

SigmaSet sigma(const SphericalSystem& T) {
    if (T.group == nullptr) throw Error("system has no group");
    return sigma(*T.group, T.elements);
}

bool is_valid_system(const PermGroup& G, const RamType& A,
                     const std::vector<std::uint32_t>& elements) {
    if (elements.size() != A.orders.size()) return false;
    std::vector<std::uint32_t> orders;
    orders.reserve(elements.size());
    std::uint32_t product = 0;
    for (std::uint32_t h : elements) {
        if (h >= G.order()) return false;
        orders.push_back(G.element_order(h));
        product = G.mul(product, h);
    }
    if (product != 0) return false;
    std::sort(orders.begin(), orders.end());
    if (orders != A.orders) return false;
    return G.closure_of_elements(elements).count() == G.order();
}

namespace {

/// One distinct entry value of the type multiset plus its bucket.
struct OrderSlot {
    std::uint32_t order;
    int remaining;
    const std::vector<std::uint32_t>* bucket;
};

struct Walker {
    const PermGroup& G;
    const std::function<bool(const std::vector<std::uint32_t>&)>& visit;
    std::vector<OrderSlot> slots;
    std::vector<std::uint32_t> tuple;
    std::uint32_t r;
    std::uint64_t visited = 0;
    bool stopped = false;

    void dfs(std::uint32_t product) {
        if (tuple.size() + 1 == r) {
            const std::uint32_t last = G.inv(product);
            const std::uint32_t last_order = G.element_order(last);
            for (OrderSlot& s : slots) {
                if (s.remaining == 0 || s.order != last_order) continue;
                if (G.closure_of_elements(tuple).count() != G.order()) return;
                tuple.push_back(last);
                ++visited;
                if (!visit(tuple)) stopped = true;
                tuple.pop_back();
                return;
            }
            return;
        }
        for (OrderSlot& s : slots) {
            if (s.remaining == 0) continue;
            s.remaining -= 1;
            for (std::uint32_t h : *s.bucket) {
                tuple.push_back(h);
                dfs(G.mul(product, h));
                tuple.pop_back();
                if (stopped) break;
            }
            s.remaining += 1;
            if (stopped) return;
        }
    }
};

}  // namespace

std::uint64_t for_each_system(
    const PermGroup& G, const RamType& A,
    const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    const std::uint32_t r = A.r();
    std::vector<OrderSlot> slots;
    for (std::uint32_t m : A.orders) {
        if (!slots.empty() && slots.back().order == m) {
            slots.back().remaining += 1;
            continue;
        }
        if (!G.has_element_of_order(m)) return 0;
        slots.push_back(OrderSlot{m, 1, &G.elements_of_order(m)});
    }
    if (r == 1) {
        // The lone entry would have to be the identity, whose order is 1,
        // but every type entry is at least 2.
        return 0;
    }
    Walker w{G, visit, std::move(slots), {}, r};
    w.tuple.reserve(r);
    w.dfs(0);
    return w.visited;
}

std::vector<SphericalSystem> enumerate_systems(const PermGroup& G, const RamType& A) {
    std::vector<SphericalSystem> out;
    for_each_system(G, A, [&](const std::vector<std::uint32_t>& tuple) {
        out.push_back(SphericalSystem{&G, tuple, A});
        return true;
    });
    return out;
}

bool is_free(const std::vector<SphericalSystem>& systems) {
    if (systems.size() < 2)
        throw Error("freeness test requires at least two systems");
    const PermGroup* G = systems.front().group;
    if (G == nullptr) throw Error("system has no group");
    for (const SphericalSystem& T : systems)
        if (T.group != G)
            throw Error("freeness test requires systems on a single group");
    ElementSet acc = sigma(systems.front());
    for (std::size_t i = 1; i < systems.size(); ++i) {
        acc &= sigma(systems[i]);
        if (acc.is_identity_only()) break;
    }
    return acc.is_identity_only();
}

}  // namespace prodquot
