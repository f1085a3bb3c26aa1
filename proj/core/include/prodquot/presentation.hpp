#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prodquot/perm.hpp"

namespace prodquot {

/// One letter of a group word: a generator index with exponent +1 or -1.
struct Letter {
    std::uint32_t gen = 0;
    std::int8_t exp = 1;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

/// A freely reduced word in the generators.  The empty word is the identity.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters == b.letters;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word w);

/// The inverse word: letters reversed with exponents flipped.
Word word_inverse(const Word& w);

/// Concatenation followed by free reduction.
Word word_concat(const Word& a, const Word& b);

/// A finite presentation: named generators and a list of relator words,
/// each declared equal to the identity.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.generator_names == b.generator_names && a.relators == b.relators;
    }
    friend bool operator!=(const Presentation& a, const Presentation& b) {
        return !(a == b);
    }
};

/// Parses presentation source such as "< x, y | x^4 = 1, y^3 = 1, x*y*x^-1 = y^-1 >".
///
/// Accepted notation:
///  * ASCII or Unicode angle brackets; '*' between terms optional; whitespace
///    insignificant.
///  * Relations may chain equalities: "u = v = w" yields relators u*v^-1 and
///    v*w^-1.  A bare word is itself a relator; "1" is the empty word.
///  * Powers: "x^3", "x^-1", "(x*y)^2", and Unicode superscripts ("x¹⁰", "y⁻¹").
///  * Commutators "[a,b]" expand to a^-1*b^-1*a*b.
///  * Conjugation "a^b" (exponent a term rather than an integer) expands to
///    b^-1*a*b.
///
/// Relators are stored freely reduced; relators that reduce to the empty word
/// are dropped.  Throws ParseError (with line/column) on malformed input and
/// UnknownGenerator for names not in the generator list.
Presentation parse_presentation(const std::string& text);

/// Canonical ASCII rendering: "< x, y | x^4, y^3, x*y*x^-1*y >".  Adjacent
/// equal letters are collected into powers.  Parsing the result reproduces
/// the presentation exactly.
std::string print_presentation(const Presentation& P);

}  // namespace prodquot
