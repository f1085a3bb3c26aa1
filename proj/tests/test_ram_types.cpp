#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "prodquot/errors.hpp"
#include "prodquot/ram_types.hpp"

using namespace prodquot;

namespace {

RamType T(std::vector<std::uint32_t> v) { return ram_type(std::move(v)); }

}  // namespace

TEST_CASE("curvature defect of basic tuples") {
    CHECK(theta(T({2, 3, 7})) == Rational(1, 42));
    CHECK(theta(T({2, 2})) == Rational(-1));
    CHECK(theta(T({3, 3, 3, 3})) == Rational(2, 3));
    CHECK(theta(T({2, 2, 2, 2})) == Rational(0));
    CHECK(theta(T({5, 5, 5})) == Rational(2, 5));
    CHECK(theta(T({2, 2, 2, 2, 2, 2})) == Rational(1));
}

TEST_CASE("index of a tuple is twice the reciprocal defect") {
    CHECK(alpha(T({2, 3, 7})) == 84);
    CHECK(alpha(T({2, 5, 5})) == 20);
    CHECK(alpha(T({3, 3, 3, 3})) == 3);
    CHECK(alpha(T({2, 2, 2, 2, 2, 2})) == 2);
    CHECK_THROWS_AS(alpha(T({2, 2, 2, 2})), ThetaZero);
}

TEST_CASE("admissibility requires a positive defect dividing 2 integrally") {
    CHECK(is_admissible(T({2, 3, 7})));
    CHECK(is_admissible(T({2, 2, 2, 3})));
    CHECK_FALSE(is_admissible(T({2, 3, 6})));   // defect 0
    CHECK_FALSE(is_admissible(T({2, 3, 5})));   // defect -1/30, negative
    CHECK_FALSE(is_admissible(T({2, 3, 11})));  // index 132/5 not integral
    CHECK_FALSE(is_admissible(T({2, 3, 13})));  // alpha not integral
    CHECK_FALSE(is_admissible(T({2, 2})));      // defect negative
}

TEST_CASE("tuple constructor validates and sorts") {
    CHECK(T({7, 3, 2}).orders == std::vector<std::uint32_t>{2, 3, 7});
    CHECK(T({7, 3, 2}) == T({2, 3, 7}));
    CHECK(T({2, 3, 7}).str() == "[2,3,7]");
    CHECK(theta(T({2})) == Rational(-3, 2));  // degenerate but well-defined
    CHECK_THROWS_AS(T({}), Error);
    CHECK_THROWS_AS(T({1, 2, 2}), Error);
    CHECK_THROWS_AS(T({2, 0, 2}), Error);
}

TEST_CASE("the full admissible table is exactly the expected 30 tuples") {
    const auto& all = enumerate_admissible_types();
    std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> expect = {
        {{2, 3, 7}, 84},   {{2, 3, 8}, 48},  {{2, 4, 5}, 40},  {{2, 3, 9}, 36},
        {{2, 3, 10}, 30},  {{2, 3, 12}, 24}, {{2, 4, 6}, 24},  {{3, 3, 4}, 24},
        {{2, 5, 5}, 20},   {{2, 3, 18}, 18}, {{2, 4, 8}, 16},  {{3, 3, 5}, 15},
        {{2, 4, 12}, 12},  {{2, 6, 6}, 12},  {{3, 3, 6}, 12},  {{3, 4, 4}, 12},
        {{2, 5, 10}, 10},  {{3, 3, 9}, 9},   {{2, 8, 8}, 8},   {{4, 4, 4}, 8},
        {{3, 6, 6}, 6},    {{5, 5, 5}, 5},   {{2, 2, 2, 3}, 12},
        {{2, 2, 2, 4}, 8}, {{2, 2, 2, 6}, 6},{{2, 2, 3, 3}, 6},
        {{2, 2, 4, 4}, 4}, {{3, 3, 3, 3}, 3},{{2, 2, 2, 2, 2}, 4},
        {{2, 2, 2, 2, 2, 2}, 2},
    };
    REQUIRE(all.size() == 30);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& t : all) {
        CHECK(is_admissible(t));
        seen.insert(t.orders);
    }
    std::size_t r3 = 0, r4 = 0, r5 = 0, r6 = 0;
    for (const auto& [orders, a] : expect) {
        RamType t = T(std::vector<std::uint32_t>(orders));
        CHECK(seen.count(orders) == 1);
        CHECK(alpha(t) == a);
        switch (orders.size()) {
            case 3: ++r3; break;
            case 4: ++r4; break;
            case 5: ++r5; break;
            default: ++r6; break;
        }
    }
    CHECK(r3 == 22);
    CHECK(r4 == 6);
    CHECK(r5 == 1);
    CHECK(r6 == 1);
    CHECK(max_alpha() == 84);
    // Table is sorted by length then lexicographically.
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("distinct index values of the table") {
    std::vector<std::uint32_t> want{2,  3,  4,  5,  6,  8,  9,  10, 12, 15,
                                    16, 18, 20, 24, 30, 36, 40, 48, 84};
    CHECK(admissible_alpha_values() == want);
    CHECK(is_admissible_alpha(84));
    CHECK(is_admissible_alpha(2));
    CHECK_FALSE(is_admissible_alpha(7));
    CHECK_FALSE(is_admissible_alpha(21));
    CHECK_FALSE(is_admissible_alpha(0));
}

TEST_CASE("dropping the divisibility filter admits strictly more tuples") {
    const auto& strict = enumerate_admissible_types();
    const auto& relaxed = enumerate_integer_alpha_types();
    CHECK(relaxed.size() > strict.size());
    std::set<std::vector<std::uint32_t>> strict_set, relaxed_set;
    for (const auto& t : strict) strict_set.insert(t.orders);
    for (const auto& t : relaxed) relaxed_set.insert(t.orders);
    for (const auto& o : strict_set) CHECK(relaxed_set.count(o) == 1);
    // Tuples with an integer index that fails the divisibility requirement.
    CHECK(relaxed_set.count({2, 5, 6}) == 1);   // alpha 15, 6 does not divide 15
    CHECK(relaxed_set.count({3, 4, 6}) == 1);   // alpha 8
    CHECK(strict_set.count({2, 5, 6}) == 0);
    CHECK(strict_set.count({3, 4, 6}) == 0);
}

TEST_CASE("genus recovery from the index relation") {
    CHECK(genus_from_rh(48, T({3, 3, 4})) == 3);
    CHECK(genus_from_rh(168, T({2, 3, 7})) == 3);
    CHECK(genus_from_rh(60, T({2, 5, 5})) == 4);
    CHECK(genus_from_rh(84, T({2, 3, 7})) == 2);
    CHECK(genus_from_rh(8, T({2, 2, 2, 2, 2, 2})) == 5);
    // 48 * 1/42 is not an even integer.
    CHECK_THROWS_AS(genus_from_rh(48, T({2, 3, 7})), NonIntegralGenus);
    CHECK_THROWS_AS(genus_from_rh(7, T({2, 2, 2, 3})), NonIntegralGenus);
}

TEST_CASE("product Euler number from genus data") {
    CHECK(euler_number(16, GenusVector{{3, 3, 3, 3}}) == 16);
    CHECK(euler_number(1, GenusVector{{2, 2}}) == 4);
    CHECK(euler_number(48, GenusVector{{3, 3, 3, 7}}) == 16);
    CHECK(euler_number(24, GenusVector{{2, 5, 7}}) == -8);
    CHECK(euler_number(4, GenusVector{{3, 3}}) == 4);
    // (g-1) products must be divisible by order^(n-1).
    CHECK_THROWS_AS(euler_number(7, GenusVector{{3, 3}}), NonIntegral);
    CHECK_THROWS_AS(euler_number(4, GenusVector{{1, 3}}), Error);
}

TEST_CASE("type lookup filters by index, spectrum, and order divisibility") {
    // Spectrum of the order-12 dihedral group.
    std::set<std::uint32_t> d12{1, 2, 3, 6};
    auto got = types_for(12, 12, d12);
    std::set<std::vector<std::uint32_t>> names;
    for (const auto& t : got) names.insert(t.orders);
    std::set<std::vector<std::uint32_t>> want{
        {2, 6, 6}, {3, 3, 6}, {2, 2, 2, 3}};
    CHECK(names == want);

    // With an order-4 element admitted, two more tuples qualify.
    std::set<std::uint32_t> full{1, 2, 3, 4, 6, 12};
    auto got2 = types_for(12, 12, full);
    CHECK(got2.size() == 5);

    // Index must divide the group order.
    CHECK(types_for(10, 4, {1, 2, 5, 10}).empty());
    // No order-3 elements: [2,4,5] is the only index-40 option left by spectrum.
    auto got3 = types_for(40, 40, {1, 2, 4, 5, 8, 10, 20, 40});
    REQUIRE(got3.size() == 1);
    CHECK(got3[0].orders == std::vector<std::uint32_t>{2, 4, 5});
    // Index 2 forces the unique length-6 tuple.
    auto got4 = types_for(4, 2, {1, 2, 4});
    REQUIRE(got4.size() == 1);
    CHECK(got4[0].orders == std::vector<std::uint32_t>{2, 2, 2, 2, 2, 2});
}

TEST_CASE("genus vector container ordering") {
    GenusVector a{{2, 3}};
    GenusVector b{{2, 3}};
    GenusVector c{{3, 2}};
    CHECK(a == b);
    CHECK(a != c);          // order-sensitive container; callers sort
    CHECK(a < c);
    CHECK(a.n() == 2);
}
