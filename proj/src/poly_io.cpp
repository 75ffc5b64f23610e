#include "cubic/poly_io.hpp"

#include <cctype>
#include <vector>

namespace cubic {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    int line = 1, col = 1;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    Integer read_uint() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        std::string digits;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Integer(digits);
    }
};

struct RawTerm {
    Rational coeff;
    std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
};

// term := [coeff] ('*' factor)*  |  factor ('*' factor)*
// factor := 'x' uint ['^' uint]
RawTerm parse_term(Cursor& c) {
    RawTerm t{make_rational(1), {}};
    c.skip_ws();
    bool saw_any = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Integer num = c.read_uint();
        Integer den = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '/') {
            c.advance();
            c.skip_ws();
            den = c.read_uint();
            if (den == 0) c.fail("zero denominator");
        }
        t.coeff = make_rational(num, den);
        saw_any = true;
        c.skip_ws();
        if (!c.done() && c.peek() == '*') {
            c.advance();
            c.skip_ws();
        } else {
            return t;  // bare constant
        }
    }
    while (true) {
        if (c.done() || c.peek() != 'x') c.fail("expected variable like x0");
        c.advance();
        const Integer idx = c.read_uint();
        if (idx > 4096) c.fail("variable index too large");
        int exp = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
            c.advance();
            c.skip_ws();
            const Integer e = c.read_uint();
            if (e > 200) c.fail("exponent too large");
            exp = static_cast<int>(e.get_si());
        }
        t.powers.emplace_back(static_cast<int>(idx.get_si()), exp);
        saw_any = true;
        c.skip_ws();
        if (!c.done() && c.peek() == '*') {
            c.advance();
            c.skip_ws();
            continue;
        }
        break;
    }
    if (!saw_any) c.fail("empty term");
    return t;
}

}  // namespace

Poly parse_poly(const std::string& text, int min_vars) {
    Cursor c{text};
    std::vector<std::pair<RawTerm, int>> terms;  // term, sign
    c.skip_ws();
    if (c.done()) c.fail("empty input");
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        c.advance();
    }
    while (true) {
        terms.emplace_back(parse_term(c), sign);
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            c.advance();
        } else {
            c.fail("expected '+' or '-' between terms");
        }
    }
    int n = min_vars;
    for (const auto& [t, s] : terms)
        for (const auto& [idx, e] : t.powers) n = std::max(n, idx + 1);
    std::vector<Poly::Term> out;
    out.reserve(terms.size());
    for (const auto& [t, s] : terms) {
        Monomial m(n);
        for (const auto& [idx, e] : t.powers) {
            if (m.e[idx] + e > 255) throw ParseError("exponent overflow", 1, 1);
            m.e[idx] = static_cast<std::uint8_t>(m.e[idx] + e);
        }
        out.emplace_back(std::move(m), t.coeff * s);
    }
    return Poly::from_terms(n, std::move(out));
}

std::string print_poly(const Poly& p) { return p.to_string(); }

}  // namespace cubic
