#include "codiff/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace codiff {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                    what);
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    Integer integer() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return Integer(text.substr(start, pos - start));
    }

    int small_int() {
        const Integer n = integer();
        if (n > 1000) fail("index out of range");
        return static_cast<int>(n);
    }

    Rational rational() {
        const Integer num = integer();
        if (!consume('/')) return Rational(num);
        const Integer den = integer();
        if (den.is_zero()) fail("zero denominator");
        return Rational(num, den);
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_')) {
            ++pos;
        }
        return text.substr(start, pos - start);
    }
};

// A single additive term: coefficient polynomial times one psi/phi atom,
// or a bare "0".
void parse_term(Cursor& c, const GradedSpace& space, bool negate,
                Coderivation<Polynomial>& out) {
    Polynomial coeff(negate ? -1 : 1);
    bool saw_atom = false;

    while (true) {
        const char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = coeff * c.rational();
        } else if (ch == '(') {
            ++c.pos;
            const bool neg = c.consume('-');
            Rational r = c.rational();
            c.expect(')');
            coeff = coeff * (neg ? Rational(-r) : r);
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t at = c.pos;
            const std::string name = c.word();
            if (name == "psi" || name == "phi") {
                if (saw_atom) {
                    c.pos = at;
                    c.fail("a term may contain only one psi/phi factor");
                }
                saw_atom = true;
                c.expect('(');
                Word w;
                if (c.peek() != ';') {
                    w.push_back(c.small_int());
                    while (c.consume(',')) w.push_back(c.small_int());
                }
                c.expect(';');
                const int target = c.small_int();
                c.expect(')');
                if (!space.valid_word(w) || target < 1 || target > space.total_dim()) {
                    c.fail(name + " term index out of range for the space");
                }
                const int want = name == "psi" ? 1 : 0;
                if (term_parity(w, target, space) != want) {
                    c.fail(name + " used for a term of the opposite parity");
                }
                Coderivation<Polynomial> atom(space);
                atom.add_term(w, target, coeff);
                out += atom;
            } else if (name.size() >= 2 && name[0] == 't' &&
                       name.find_first_not_of("0123456789", 1) == std::string::npos) {
                Polynomial v = Polynomial::variable(name);
                int exp = 1;
                if (c.consume('^')) exp = c.small_int();
                for (int i = 0; i < exp; ++i) coeff *= v;
            } else {
                c.pos = at;
                c.fail("unexpected token '" + name + "'");
            }
        } else {
            c.fail("expected a coefficient or a psi/phi term");
        }
        if (!c.consume('*')) break;
    }

    if (!saw_atom) {
        // allow a bare 0 (and only 0) as the zero coderivation
        if (!coeff.is_zero()) c.fail("term without a psi/phi factor");
    }
}

}  // namespace

Coderivation<Polynomial> parse_poly_coderivation(const std::string& text,
                                                 const GradedSpace& space) {
    Cursor c{text};
    Coderivation<Polynomial> out(space);
    if (c.done()) c.fail("empty input");

    bool negate = false;
    if (c.consume('-')) negate = true;
    else c.consume('+');
    parse_term(c, space, negate, out);
    while (!c.done()) {
        if (c.consume('+')) negate = false;
        else if (c.consume('-')) negate = true;
        else c.fail("expected '+' or '-' between terms");
        parse_term(c, space, negate, out);
    }
    return out;
}

Coderivation<Rational> parse_coderivation(const std::string& text, const GradedSpace& space) {
    const Coderivation<Polynomial> p = parse_poly_coderivation(text, space);
    Coderivation<Rational> out(space);
    for (const auto& [key, poly] : p.terms()) {
        if (!poly.is_constant()) {
            throw std::invalid_argument("parse error: parameters are not allowed here");
        }
        out.add_term(key.word, key.target, poly.evaluate({}));
    }
    return out;
}

std::pair<Rational, Rational> parse_projective_pair(const std::string& text) {
    Cursor c{text};
    const bool parens = c.consume('(');
    auto signed_rational = [&c]() {
        const bool neg = c.consume('-');
        Rational r = c.rational();
        return neg ? Rational(-r) : r;
    };
    const Rational p = signed_rational();
    c.expect(':');
    const Rational q = signed_rational();
    if (parens) c.expect(')');
    if (!c.done()) c.fail("trailing input after (p:q)");
    return {p, q};
}

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    const bool neg = c.consume('-');
    Rational r = c.rational();
    if (!c.done()) c.fail("trailing input after number");
    return neg ? Rational(-r) : r;
}

}  // namespace codiff
