#include "visev/parser.hpp"

#include <cctype>

namespace visev {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

struct ExprParser {
    Lexer lx;
    RingPtr ring;

    ExprParser(const std::string& text, RingPtr r) : lx(text), ring(std::move(r)) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (lx.peek() != '\0') lx.fail("unexpected trailing input");
        return p;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            char c = lx.peek();
            if (c == '+') {
                lx.advance();
                acc = acc + term();
            } else if (c == '-') {
                lx.advance();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = lx.peek();
            if (c == '*') {
                lx.advance();
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        char c = lx.peek();
        if (c == '-') {
            lx.advance();
            return -factor();
        }
        Polynomial base = atom();
        if (lx.peek() == '^') {
            lx.advance();
            long e = integer_literal();
            if (e < 0) lx.fail("negative exponent");
            return base.pow(static_cast<unsigned long>(e));
        }
        return base;
    }

    Polynomial atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            Polynomial p = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.advance();
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = identifier();
            int idx = ring->index_of(name);
            if (idx < 0) lx.fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring, idx);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        lx.fail("expected a factor");
    }

    std::string identifier() {
        lx.skip_ws();
        std::string name;
        while (lx.pos < lx.s.size()) {
            char c = lx.s[lx.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                lx.advance();
            } else {
                break;
            }
        }
        return name;
    }

    long integer_literal() {
        lx.skip_ws();
        bool neg = false;
        if (lx.peek() == '-') {
            neg = true;
            lx.advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected an integer");
        std::string digits;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
            digits += lx.s[lx.pos];
            lx.advance();
        }
        return neg ? -std::stol(digits) : std::stol(digits);
    }

    Polynomial rational_literal() {
        lx.skip_ws();
        std::string digits;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
            digits += lx.s[lx.pos];
            lx.advance();
        }
        Int num(digits);
        if (lx.peek() == '/') {
            lx.advance();
            if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected a denominator");
            std::string den;
            while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
                den += lx.s[lx.pos];
                lx.advance();
            }
            Int d(den);
            if (sgn(d) == 0) lx.fail("zero denominator");
            Rat r(num, d);
            r.canonicalize();
            return Polynomial::constant(ring, r);
        }
        return Polynomial::constant(ring, Rat(num));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    ExprParser p(text, ring);
    return p.parse();
}

}  // namespace visev
