#include "doctest.h"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prodquot/catalog.hpp"
#include "prodquot/group.hpp"
#include "prodquot/isomorphism.hpp"

using namespace prodquot;

namespace {

const std::string kGroupsDir = std::string(PRODQUOT_DATA_DIR) + "/groups";

const Catalog& named_catalog() {
    static Catalog cat = Catalog::load(kGroupsDir + "/named.cat");
    return cat;
}

const Catalog& order_catalog(unsigned order) {
    static std::map<unsigned, Catalog> cache;
    auto it = cache.find(order);
    if (it == cache.end()) {
        char name[32];
        std::snprintf(name, sizeof name, "/o%03u.cat", order);
        it = cache.emplace(order, Catalog::load(kGroupsDir + name)).first;
    }
    return it->second;
}

/// Element index of a word in the group's generators; each entry of `word`
/// is a generator position (0-based, in source order).
std::uint32_t word_elem(const PermGroup& g, std::initializer_list<int> word) {
    std::uint32_t acc = 0;  // identity
    for (int k : word) acc = g.mul(acc, g.index_of(g.generators()[static_cast<std::size_t>(k)]));
    return acc;
}

/// Checks that the conjugacy class of `rep` consists of exactly the listed
/// words, element for element, and that its members have the stated order.
void check_class(const PermGroup& g, std::initializer_list<int> rep,
                 std::vector<std::initializer_list<int>> members,
                 std::uint32_t member_order) {
    const std::uint32_t r = word_elem(g, rep);
    CHECK(g.element_order(r) == member_order);
    std::set<std::uint32_t> expect;
    for (const auto& w : members) expect.insert(word_elem(g, w));
    CHECK(expect.size() == members.size());  // the listed words are distinct
    const auto& cls = g.conjugacy_classes()[g.class_index(r)];
    std::set<std::uint32_t> got(cls.begin(), cls.end());
    CHECK(got == expect);
}

}  // namespace

TEST_CASE("every named group realizes at its declared order") {
    const Catalog& cat = named_catalog();
    CHECK(cat.names().size() == 37);
    for (const GroupDef& def : cat.manifest().groups)
        CHECK(cat.group(def.name).order() == def.declared_order);
}

TEST_CASE("alternative presentations of one group are isomorphic") {
    const Catalog& cat = named_catalog();
    CHECK(are_isomorphic(cat.group("z3_d4"), cat.group("z3_d4_alt")));

    // Distinct order-24 types stay distinct.
    const char* kOrder24[] = {"s4", "sl2_3", "z3_d4", "z3_z8", "dic6", "d12", "d_2_12_5"};
    for (const char* a : kOrder24)
        for (const char* b : kOrder24)
            CHECK(are_isomorphic(cat.group(a), cat.group(b)) ==
                  (std::string(a) == b));

    // Distinct order-48 types stay distinct.
    const char* kOrder48[] = {"gl2_3", "z2xs4", "z4sq_z3", "h48"};
    for (const char* a : kOrder48)
        for (const char* b : kOrder48)
            CHECK(are_isomorphic(cat.group(a), cat.group(b)) ==
                  (std::string(a) == b));
}

TEST_CASE("element-order facts used by the order eliminations hold") {
    const Catalog& cat = named_catalog();

    // Unique involution, necessarily central.
    for (const char* name : {"sl2_3", "dic6", "q8", "dic3", "dic5", "dic10",
                             "z3_dic5"}) {
        const PermGroup& g = cat.group(name);
        INFO(name);
        REQUIRE(g.order_histogram().count(2) == 1);
        CHECK(g.order_histogram().at(2) == 1);
        CHECK(g.center().contains(g.elements_of_order(2).front()));
    }

    // Dihedral of order twelve: seven involutions, two elements each of
    // orders three and six.
    {
        const PermGroup& d6 = cat.group("d6");
        const auto& h = d6.order_histogram();
        CHECK(h.at(2) == 7);
        CHECK(h.at(3) == 2);
        CHECK(h.at(6) == 2);
    }

    // The full 2x2 linear group over the three-element field.
    {
        const PermGroup& g = cat.group("gl2_3");
        CHECK(g.order_histogram().count(12) == 0);
        std::size_t noncentral_involution_classes = 0;
        for (const auto& cls : g.conjugacy_classes())
            if (g.element_order(cls.front()) == 2 && cls.size() > 1)
                ++noncentral_involution_classes;
        CHECK(noncentral_involution_classes == 1);
        CHECK(g.derived_subgroup_order() == 24);
        // Everything of order 3, 4 or 6 lies in the derived subgroup.
        std::vector<std::uint32_t> comms;
        for (std::uint32_t a = 0; a < g.order(); ++a)
            for (std::uint32_t b = 0; b < g.order(); ++b)
                comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
        ElementSet derived = g.closure_of_elements(comms);
        REQUIRE(derived.count() == 24);
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            std::uint32_t k = g.element_order(x);
            if (k == 3 || k == 4 || k == 6) CHECK(derived.contains(x));
        }
    }

    // The simple group of order 168 has a single class of involutions.
    {
        const PermGroup& g = cat.group("psl2_7");
        std::size_t involution_classes = 0;
        for (const auto& cls : g.conjugacy_classes())
            if (g.element_order(cls.front()) == 2) ++involution_classes;
        CHECK(involution_classes == 1);
    }

    // The distinguished order-48 group: no order-8 element, exactly eight
    // elements of order 4.
    {
        const PermGroup& g = cat.group("h48");
        CHECK(g.order_histogram().count(8) == 0);
        CHECK(g.order_histogram().at(4) == 8);
        CHECK(g.order_histogram().count(12) == 1);
    }

    // The order-48 extension of the squared four-cycle lattice by a
    // three-fold symmetry: no elements of order 8 or 12.
    {
        const PermGroup& g = cat.group("z4sq_z3");
        CHECK(g.order_histogram().count(8) == 0);
        CHECK(g.order_histogram().count(12) == 0);
        std::multiset<std::pair<std::uint32_t, std::size_t>> shape;
        for (const auto& cls : g.conjugacy_classes())
            shape.emplace(g.element_order(cls.front()), cls.size());
        std::multiset<std::pair<std::uint32_t, std::size_t>> want{
            {1, 1}, {3, 16}, {3, 16}, {2, 3}, {4, 3}, {4, 3}, {4, 3}, {4, 3}};
        CHECK(shape == want);
    }

    // Direct product of two four-cycles: abelian, three involutions.
    {
        const PermGroup& g = cat.group("z4xz4");
        CHECK(g.conjugacy_classes().size() == 16);
        CHECK(g.order_histogram().at(2) == 3);
    }
}

TEST_CASE("conjugacy classes of the four-generator order-24 group") {
    // Generators in source order: x=0, y=1, z=2, w=3.
    const PermGroup& g = named_catalog().group("z3_d4");
    REQUIRE(g.order() == 24);
    CHECK(g.conjugacy_classes().size() == 9);
    check_class(g, {0}, {{0}, {0, 1}, {0, 3}, {0, 3, 3}, {0, 1, 3}, {0, 1, 3, 3}}, 2);
    check_class(g, {1}, {{1}}, 2);
    check_class(g, {2}, {{2}, {1, 2}}, 2);
    check_class(g, {3}, {{3}, {3, 3}}, 3);
    check_class(g, {0, 2},
                {{0, 2}, {2, 0}, {0, 2, 3}, {0, 2, 3, 3}, {2, 0, 3}, {2, 0, 3, 3}}, 4);
    check_class(g, {1, 3}, {{1, 3}, {1, 3, 3}}, 6);
    check_class(g, {2, 3}, {{2, 3}, {1, 2, 3, 3}}, 6);
    check_class(g, {2, 3, 3}, {{2, 3, 3}, {1, 2, 3}}, 6);
}

TEST_CASE("conjugacy classes of the distinguished order-48 group") {
    // Generators in source order: x=0, y=1, z=2, w=3, t=4.
    const PermGroup& g = named_catalog().group("h48");
    REQUIRE(g.order() == 48);
    CHECK(g.conjugacy_classes().size() == 14);
    check_class(g, {4}, {{4}}, 2);
    check_class(g, {0}, {{0}}, 4);
    check_class(g, {0, 4}, {{0, 4}}, 4);
    check_class(g, {2}, {{2}, {3}, {2, 3}, {3, 4}, {2, 4}, {2, 3, 4}}, 4);
    check_class(g, {0, 2}, {{0, 2}, {0, 3}, {0, 2, 3}, {0, 3, 4}, {0, 2, 4}, {0, 2, 3, 4}}, 2);
    check_class(g, {1}, {{1}, {1, 3, 4}, {1, 2, 3, 4}, {1, 2, 4}}, 3);
    check_class(g, {1, 1}, {{1, 1}, {1, 1, 2, 3}, {1, 1, 2}, {1, 1, 3}}, 3);
    check_class(g, {1, 4}, {{1, 4}, {1, 3}, {1, 2, 3}, {1, 2}}, 6);
    check_class(g, {1, 1, 4}, {{1, 1, 4}, {1, 1, 2, 3, 4}, {1, 1, 2, 4}, {1, 1, 3, 4}}, 6);
    check_class(g, {0, 1}, {{0, 1}, {0, 1, 3, 4}, {0, 1, 2, 3, 4}, {0, 1, 2, 4}}, 12);
    check_class(g, {0, 1, 4}, {{0, 1, 4}, {0, 1, 3}, {0, 1, 2, 3}, {0, 1, 2}}, 12);
    check_class(g, {0, 1, 1}, {{0, 1, 1}, {0, 1, 1, 2, 3}, {0, 1, 1, 2}, {0, 1, 1, 3}}, 12);
    check_class(g, {0, 1, 1, 4},
                {{0, 1, 1, 4}, {0, 1, 1, 2, 3, 4}, {0, 1, 1, 2, 4}, {0, 1, 1, 3, 4}}, 12);
}

TEST_CASE("the eleven non-abelian order-40 groups share one five-cycle subgroup") {
    const Catalog& cat = order_catalog(40);
    std::size_t non_abelian = 0;
    for (const std::string& name : cat.names()) {
        const PermGroup& g = cat.group(name);
        if (g.derived_subgroup_order() == 1) continue;  // abelian
        ++non_abelian;
        // A unique cyclic subgroup of order 5 means exactly four elements
        // of order 5.
        CHECK(g.order_histogram().at(5) == 4);
    }
    CHECK(non_abelian == 11);
}

TEST_CASE("order catalogs are complete and irredundant") {
    const unsigned kOrders[] = {16, 24, 32, 36, 40, 48, 60, 72, 80, 96, 144, 168};
    const std::map<unsigned, std::size_t> kCounts{
        {16, 14},  {24, 15},  {32, 51},  {36, 14}, {40, 14},  {48, 52},
        {60, 13},  {72, 50},  {80, 52},  {96, 231}, {144, 197}, {168, 57}};
    for (unsigned n : kOrders) {
        INFO("order " << n);
        const Catalog& cat = order_catalog(n);
        CHECK(cat.names().size() == kCounts.at(n));
        CompletenessReport rep = cat.completeness({n});
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].status == OrderStatus::PASS);
        CHECK(rep.rows[0].actual == kCounts.at(n));
        CHECK(rep.rows[0].pairwise_distinct);
        CHECK(rep.all_pass);
    }
}

TEST_CASE("named groups appear exactly once in their order catalog") {
    const Catalog& named = named_catalog();
    struct Probe {
        const char* name;
        unsigned order;
    };
    const Probe probes[] = {{"dic6", 24},   {"z3_d4", 24},  {"d12", 24},
                            {"sl2_3", 24},  {"s4", 24},     {"gl2_3", 48},
                            {"h48", 48},    {"z4sq_z3", 48}, {"z2xs4", 48},
                            {"psl2_7", 168}, {"z5_d4", 40},  {"z3_dic5", 60}};
    for (const Probe& p : probes) {
        INFO(p.name);
        const Catalog& cat = order_catalog(p.order);
        std::size_t hits = 0;
        for (const std::string& n : cat.names())
            if (are_isomorphic(named.group(p.name), cat.group(n))) ++hits;
        CHECK(hits == 1);
    }
}
