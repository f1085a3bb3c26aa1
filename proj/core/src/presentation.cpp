#include "prodquot/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "prodquot/errors.hpp"

namespace prodquot {

namespace {

void append_letter(Word& w, Letter l) {
    if (!w.letters.empty() && w.letters.back().gen == l.gen &&
        w.letters.back().exp == -l.exp) {
        w.letters.pop_back();
    } else {
        w.letters.push_back(l);
    }
}

void append_word(Word& w, const Word& v) {
    for (Letter l : v.letters) append_letter(w, l);
}

void append_inverse(Word& w, const Word& v) {
    for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it)
        append_letter(w, Letter{it->gen, static_cast<std::int8_t>(-it->exp)});
}

Word word_power(const Word& base, std::int64_t k) {
    Word out;
    if (k >= 0) {
        for (std::int64_t i = 0; i < k; ++i) append_word(out, base);
    } else {
        for (std::int64_t i = 0; i < -k; ++i) append_inverse(out, base);
    }
    return out;
}

enum class Tok {
    LAngle, RAngle, Pipe, Comma, Eq, Caret, LParen, RParen,
    LBrack, RBrack, Star, Minus, Number, SupNumber, Name, End,
};

struct Token {
    Tok kind;
    std::string text;    // for Name
    std::int64_t value;  // for Number / SupNumber (SupNumber carries its sign)
    int line;
    int column;
};

constexpr std::int64_t kMaxExponent = 1000000;

int superscript_digit(char32_t cp) {
    switch (cp) {
        case U'⁰': return 0;
        case U'¹': return 1;
        case U'²': return 2;
        case U'³': return 3;
        default:
            if (cp >= U'⁴' && cp <= U'⁹')
                return static_cast<int>(cp - U'⁴') + 4;
            return -1;
    }
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_whitespace();
            int line = line_, col = col_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", 0, line, col});
                return out;
            }
            char32_t cp = next_codepoint();
            switch (cp) {
                case U'<': out.push_back({Tok::LAngle, "", 0, line, col}); continue;
                case U'>': out.push_back({Tok::RAngle, "", 0, line, col}); continue;
                case U'⟨':
                case U'〈': out.push_back({Tok::LAngle, "", 0, line, col}); continue;
                case U'⟩':
                case U'〉': out.push_back({Tok::RAngle, "", 0, line, col}); continue;
                case U'|': out.push_back({Tok::Pipe, "", 0, line, col}); continue;
                case U',': out.push_back({Tok::Comma, "", 0, line, col}); continue;
                case U'=': out.push_back({Tok::Eq, "", 0, line, col}); continue;
                case U'^': out.push_back({Tok::Caret, "", 0, line, col}); continue;
                case U'(': out.push_back({Tok::LParen, "", 0, line, col}); continue;
                case U')': out.push_back({Tok::RParen, "", 0, line, col}); continue;
                case U'[': out.push_back({Tok::LBrack, "", 0, line, col}); continue;
                case U']': out.push_back({Tok::RBrack, "", 0, line, col}); continue;
                case U'*': out.push_back({Tok::Star, "", 0, line, col}); continue;
                case U'-': out.push_back({Tok::Minus, "", 0, line, col}); continue;
                default: break;
            }
            if (cp < 128 && std::isdigit(static_cast<int>(cp))) {
                std::int64_t v = static_cast<int>(cp - U'0');
                while (pos_ < text_.size() && std::isdigit(peek_byte())) {
                    v = v * 10 + (take_byte() - '0');
                    if (v > kMaxExponent)
                        throw ParseError("number too large", line, col);
                }
                out.push_back({Tok::Number, "", v, line, col});
                continue;
            }
            if (cp < 128 && (std::isalpha(static_cast<int>(cp)) || cp == U'_')) {
                std::string name(1, static_cast<char>(cp));
                while (pos_ < text_.size() &&
                       (std::isalnum(peek_byte()) || peek_byte() == '_'))
                    name.push_back(static_cast<char>(take_byte()));
                out.push_back({Tok::Name, name, 0, line, col});
                continue;
            }
            if (cp == U'⁻' || cp == U'⁺' || superscript_digit(cp) >= 0) {
                std::int64_t sign = 1, v = 0;
                bool have_digit = false;
                if (cp == U'⁻') sign = -1;
                else if (cp != U'⁺') { v = superscript_digit(cp); have_digit = true; }
                for (;;) {
                    std::size_t save_pos = pos_;
                    int save_line = line_, save_col = col_;
                    if (pos_ >= text_.size()) break;
                    char32_t d = next_codepoint();
                    int dv = superscript_digit(d);
                    if (dv < 0) {
                        pos_ = save_pos;
                        line_ = save_line;
                        col_ = save_col;
                        break;
                    }
                    v = v * 10 + dv;
                    have_digit = true;
                    if (v > kMaxExponent) throw ParseError("exponent too large", line, col);
                }
                if (!have_digit)
                    throw ParseError("superscript sign without digits", line, col);
                out.push_back({Tok::SupNumber, "", sign * v, line, col});
                continue;
            }
            throw ParseError("unexpected character", line, col);
        }
    }

private:
    void skip_whitespace() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
    }

    int peek_byte() const {
        return static_cast<unsigned char>(text_[pos_]);
    }

    int take_byte() {
        ++col_;
        return static_cast<unsigned char>(text_[pos_++]);
    }

    char32_t next_codepoint() {
        unsigned char b0 = static_cast<unsigned char>(text_[pos_]);
        int len;
        char32_t cp;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            throw ParseError("invalid UTF-8 byte", line_, col_);
        }
        if (pos_ + static_cast<std::size_t>(len) > text_.size())
            throw ParseError("truncated UTF-8 sequence", line_, col_);
        for (int i = 1; i < len; ++i) {
            unsigned char b = static_cast<unsigned char>(text_[pos_ + i]);
            if ((b & 0xC0) != 0x80)
                throw ParseError("invalid UTF-8 continuation", line_, col_);
            cp = (cp << 6) | (b & 0x3F);
        }
        pos_ += static_cast<std::size_t>(len);
        ++col_;
        return cp;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Presentation run() {
        Presentation P;
        expect(Tok::LAngle, "expected '<' at the start of a presentation");
        for (;;) {
            Token t = expect(Tok::Name, "expected a generator name");
            for (const std::string& seen : P.generator_names)
                if (seen == t.text)
                    throw ParseError("duplicate generator '" + t.text + "'", t.line,
                                     t.column);
            P.generator_names.push_back(t.text);
            if (peek().kind != Tok::Comma) break;
            advance();
        }
        names_ = &P.generator_names;
        expect(Tok::Pipe, "expected '|' between generators and relations");
        if (peek().kind != Tok::RAngle) {
            for (;;) {
                parse_relation(P);
                if (peek().kind != Tok::Comma) break;
                advance();
            }
        }
        expect(Tok::RAngle, "expected '>' at the end of the presentation");
        if (peek().kind != Tok::End)
            throw ParseError("unexpected input after '>'", peek().line, peek().column);
        return P;
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    void advance() { ++idx_; }

    Token expect(Tok kind, const std::string& msg) {
        if (peek().kind != kind) throw ParseError(msg, peek().line, peek().column);
        Token t = peek();
        advance();
        return t;
    }

    static bool starts_term(Tok k) {
        return k == Tok::Name || k == Tok::LParen || k == Tok::LBrack;
    }

    // A relation is a chain w1 = w2 = ... = wk; every adjacent pair yields
    // the relator w_i * w_{i+1}^-1.  A lone word is itself a relator.
    void parse_relation(Presentation& P) {
        std::vector<Word> chain;
        chain.push_back(parse_word());
        while (peek().kind == Tok::Eq) {
            advance();
            chain.push_back(parse_word());
        }
        auto push = [&P](Word w) {
            if (!w.letters.empty()) P.relators.push_back(std::move(w));
        };
        if (chain.size() == 1) {
            push(std::move(chain[0]));
            return;
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            Word rel = chain[i];
            append_inverse(rel, chain[i + 1]);
            push(std::move(rel));
        }
    }

    Word parse_word() {
        if (peek().kind == Tok::Number) {
            if (peek().value != 1)
                throw ParseError("only the identity word '1' may stand alone",
                                 peek().line, peek().column);
            advance();
            return Word{};
        }
        Word w = parse_term(true);
        for (;;) {
            if (peek().kind == Tok::Star) {
                advance();
                append_word(w, parse_term(true));
            } else if (starts_term(peek().kind)) {
                append_word(w, parse_term(true));
            } else {
                break;
            }
        }
        return w;
    }

    // allow_conjugation: a term exponent may itself be a term, meaning
    // conjugation; the conjugating term may only carry an integer exponent.
    Word parse_term(bool allow_conjugation) {
        Word prefix;  // all but the exponent-bearing tail of a juxtaposed run
        Word base;
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Name: {
                std::vector<std::uint32_t> run = resolve_run(t);
                for (std::size_t i = 0; i + 1 < run.size(); ++i)
                    append_letter(prefix, Letter{run[i], 1});
                base.letters.push_back(Letter{run.back(), 1});
                advance();
                break;
            }
            case Tok::LParen: {
                advance();
                base = parse_word();
                expect(Tok::RParen, "expected ')'");
                break;
            }
            case Tok::LBrack: {
                advance();
                Word a = parse_word();
                expect(Tok::Comma, "expected ',' inside commutator");
                Word b = parse_word();
                expect(Tok::RBrack, "expected ']'");
                append_inverse(base, a);
                append_inverse(base, b);
                append_word(base, a);
                append_word(base, b);
                break;
            }
            default:
                throw ParseError("expected a generator, '(' or '['", t.line, t.column);
        }
        auto finish = [&prefix](Word result) {
            append_word(prefix, result);
            return prefix;
        };
        if (peek().kind == Tok::SupNumber) {
            std::int64_t k = peek().value;
            advance();
            return finish(word_power(base, k));
        }
        if (peek().kind == Tok::Caret) {
            Token caret = peek();
            advance();
            if (peek().kind == Tok::Minus) {
                advance();
                Token n = expect(Tok::Number, "expected digits after '-'");
                return finish(word_power(base, -n.value));
            }
            if (peek().kind == Tok::Number) {
                std::int64_t k = peek().value;
                advance();
                return finish(word_power(base, k));
            }
            if (peek().kind == Tok::SupNumber) {
                std::int64_t k = peek().value;
                advance();
                return finish(word_power(base, k));
            }
            if (starts_term(peek().kind)) {
                if (!allow_conjugation)
                    throw ParseError("nested conjugation requires parentheses",
                                     peek().line, peek().column);
                Word by = parse_term(false);
                Word out;
                append_inverse(out, by);
                append_word(out, base);
                append_word(out, by);
                return finish(std::move(out));
            }
            throw ParseError("expected an integer or a word after '^'", caret.line,
                             caret.column);
        }
        return finish(std::move(base));
    }

    // A run of letters like "yxy" denotes juxtaposed generators; it is split
    // into declared names (longest-prefix first, with backtracking so every
    // declared-name segmentation is found).
    std::vector<std::uint32_t> resolve_run(const Token& t) {
        std::vector<std::uint32_t> out;
        if (!segment_run(t.text, 0, out))
            throw UnknownGenerator(t.text, t.line, t.column);
        return out;
    }

    bool segment_run(const std::string& text, std::size_t from,
                     std::vector<std::uint32_t>& out) {
        if (from == text.size()) return !out.empty();
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < names_->size(); ++i)
            if (text.compare(from, (*names_)[i].size(), (*names_)[i]) == 0)
                candidates.push_back(i);
        std::sort(candidates.begin(), candidates.end(),
                  [this](std::size_t a, std::size_t b) {
                      return (*names_)[a].size() > (*names_)[b].size();
                  });
        for (std::size_t i : candidates) {
            out.push_back(static_cast<std::uint32_t>(i));
            if (segment_run(text, from + (*names_)[i].size(), out)) return true;
            out.pop_back();
        }
        return false;
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

Word free_reduce(Word w) {
    Word out;
    for (Letter l : w.letters) append_letter(out, l);
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    append_inverse(out, w);
    return out;
}

Word word_concat(const Word& a, const Word& b) {
    Word out = free_reduce(a);
    append_word(out, b);
    return out;
}

Presentation parse_presentation(const std::string& text) {
    return Parser(Lexer(text).run()).run();
}

std::string print_presentation(const Presentation& P) {
    std::ostringstream out;
    out << "< ";
    for (std::size_t i = 0; i < P.generator_names.size(); ++i) {
        if (i) out << ", ";
        out << P.generator_names[i];
    }
    out << " | ";
    for (std::size_t r = 0; r < P.relators.size(); ++r) {
        if (r) out << ", ";
        const Word& w = P.relators[r];
        if (w.letters.empty()) {
            out << "1";
            continue;
        }
        std::size_t i = 0;
        bool first = true;
        while (i < w.letters.size()) {
            std::size_t j = i;
            while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
            std::int64_t k = static_cast<std::int64_t>(j - i) * w.letters[i].exp;
            if (!first) out << "*";
            first = false;
            out << P.generator_names[w.letters[i].gen];
            if (k != 1) out << "^" << k;
            i = j;
        }
    }
    out << " >";
    return out.str();
}

}  // namespace prodquot
