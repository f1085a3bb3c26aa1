#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "prodquot/errors.hpp"
#include "prodquot/group.hpp"
#include "prodquot/presentation.hpp"
#include "prodquot/todd_coxeter.hpp"

using namespace prodquot;

namespace {

std::uint32_t enumerated_order(const std::string& text,
                               std::uint32_t max_cosets = kDefaultMaxCosets) {
    return todd_coxeter(parse_presentation(text), max_cosets).live_cosets;
}

PermGroup group_of(const std::string& text) {
    auto [degree, gens] = permutation_rep(todd_coxeter(parse_presentation(text)));
    return PermGroup::from_generators(degree, gens, degree);
}

Perm eval_word(const Word& w, const std::vector<Perm>& gens, std::uint32_t degree) {
    Perm p = Perm::identity(degree);
    for (Letter l : w.letters)
        p = compose(p, l.exp > 0 ? gens[l.gen] : inverse(gens[l.gen]));
    return p;
}

}  // namespace

TEST_CASE("one-relator collapse to the trivial group") {
    CosetTable T = todd_coxeter(parse_presentation("< x | x = 1 >"));
    CHECK(T.live_cosets == 1);
    CHECK(T.closed());
    auto [degree, gens] = permutation_rep(T);
    CHECK(degree == 1);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].is_identity());
}

TEST_CASE("split metacyclic presentation of order 12") {
    CHECK(enumerated_order("< x, y | x^4 = 1, y^3 = 1, x*y*x^-1 = y^-1 >") == 12);
}

TEST_CASE("dicyclic presentation of order 20 in unicode notation") {
    CHECK(enumerated_order("⟨x,y | x¹⁰=1, y²=x⁵, yxy⁻¹=x⁻¹⟩") == 20);
}

TEST_CASE("free generator exhausts any coset limit") {
    try {
        todd_coxeter(parse_presentation("< a | >"), 50);
        FAIL("expected the coset limit to be hit");
    } catch (const CosetLimitExceeded& e) {
        CHECK(e.max_cosets == 50);
    }
    // Infinite dihedral group: every relation closes but cosets never stop.
    CHECK_THROWS_AS(enumerated_order("< a, b | a^2, b^2 >", 1000),
                    CosetLimitExceeded);
}

TEST_CASE("coset limit must be positive") {
    CHECK_THROWS_AS(todd_coxeter(parse_presentation("< x | x^2 >"), 0), Error);
}

TEST_CASE("classic small-order presentations enumerate to the known order") {
    CHECK(enumerated_order("< a | a^6 >") == 6);
    CHECK(enumerated_order("< a, b | a^2, b^3, [a,b] >") == 6);
    CHECK(enumerated_order("< a, b | a^3, b^2, (a*b)^2 >") == 6);
    CHECK(enumerated_order("< x, y | x^4, y^2 = x^2, y*x*y^-1 = x^-1 >") == 8);
    CHECK(enumerated_order("< a, b | a^3, b^3, (a*b)^2 >") == 12);
    CHECK(enumerated_order("< a, b | a^4, b^2, (a*b)^3 >") == 24);
    CHECK(enumerated_order("< a, b | a^5, b^2, (a*b)^3 >") == 60);
    CHECK(enumerated_order("< s, t | s^2 = t^3 = (s*t)^7 = 1, [s,t]^4 >") == 168);
}

TEST_CASE("heavy coincidence collapse") {
    CHECK(enumerated_order("< a, b | a^3, b^3, a*b >") == 3);
    CHECK(enumerated_order("< a, b | a, b >") == 1);
    CHECK(enumerated_order("< a | a^2, a^3 >") == 1);
    CHECK(enumerated_order("< a, b | a^2, b^2, (a*b)^2 >") == 4);
    CHECK(enumerated_order("< a, b | a^6, b^2 = a^3, b*a*b^-1 = a^-1 >") == 12);
}

TEST_CASE("the queried representation acts regularly") {
    for (const std::string& text : {
             "< x, y | x^4 = 1, y^3 = 1, x*y*x^-1 = y^-1 >",
             "< x, y | x^4, y^2 = x^2, y*x*y^-1 = x^-1 >",
             "< a, b | a^4, b^2, (a*b)^3 >",
         }) {
        CosetTable T = todd_coxeter(parse_presentation(text));
        auto [degree, gens] = permutation_rep(T);
        PermGroup G = PermGroup::from_generators(degree, gens, degree);
        CHECK(G.order() == degree);  // transitive and free: regular
        for (std::uint32_t g = 1; g < G.order(); ++g)
            for (std::uint32_t x = 0; x < degree; ++x)
                CHECK(G.element(g).img[x] != x);
    }
}

TEST_CASE("every relator acts trivially in the output representation") {
    for (const std::string& text : {
             "< x, y | x^4 = 1, y^3 = 1, x*y*x^-1 = y^-1 >",
             "⟨x,y | x¹⁰=1, y²=x⁵, yxy⁻¹=x⁻¹⟩",
             "< a, b | a^5, b^2, (a*b)^3 >",
             "< s, t | s^2 = t^3 = (s*t)^7 = 1, [s,t]^4 >",
         }) {
        Presentation P = parse_presentation(text);
        auto [degree, gens] = permutation_rep(todd_coxeter(P));
        for (const Word& w : P.relators)
            CHECK(eval_word(w, gens, degree).is_identity());
    }
}

TEST_CASE("enumerated order matches independently realized groups") {
    struct Case {
        std::string text;
        std::uint32_t degree;
        std::vector<std::string> cycles;
    };
    // Each presentation is paired with a permutation realization built
    // without coset enumeration; brute-force closure gives the order.
    std::vector<Case> cases = {
        {"< a, b | a^3, b^2, (a*b)^2 >", 3, {"(0 1 2)", "(0 1)"}},
        {"< r, s | r^6, s^2, s*r*s^-1 = r^-1 >",
         6,
         {"(0 1 2 3 4 5)", "(1 5)(2 4)"}},
        {"< x, y | x^4, y^4, [x,y] >", 8, {"(0 1 2 3)", "(4 5 6 7)"}},
        {"< a, b | a^4, b^2, (a*b)^3 >", 4, {"(0 1 2 3)", "(0 1)"}},
        {"< a, b | a^3, b^3, (a*b)^2 >", 4, {"(0 1 2)", "(1 2 3)"}},
    };
    for (const auto& c : cases) {
        std::vector<Perm> gens;
        for (const auto& s : c.cycles) gens.push_back(parse_cycles(s, c.degree));
        PermGroup direct = PermGroup::from_generators(c.degree, gens);
        CHECK(enumerated_order(c.text) == direct.order());
    }
}

TEST_CASE("enumeration is deterministic") {
    const std::string text = "< a, b | a^4, b^2, (a*b)^3 >";
    CosetTable T1 = todd_coxeter(parse_presentation(text));
    CosetTable T2 = todd_coxeter(parse_presentation(text));
    CHECK(T1.rows == T2.rows);
    CHECK(T1.live_cosets == T2.live_cosets);
}

TEST_CASE("partial tables are rejected by the representation queries") {
    CosetTable partial;
    partial.generator_count = 1;
    partial.live_cosets = 2;
    partial.rows = {{1, -1}, {-1, 0}};
    CHECK_FALSE(partial.closed());
    CHECK_THROWS_AS(permutation_rep(partial), TableNotClosed);
}

TEST_CASE("unique involution in the order-8 dicyclic group") {
    PermGroup Q8 = group_of("< x, y | x^4, y^2 = x^2, y*x*y^-1 = x^-1 >");
    CHECK(Q8.order() == 8);
    CHECK(Q8.elements_of_order(2).size() == 1);
    CHECK(Q8.center().count() == 2);
}
