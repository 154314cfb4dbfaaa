#include "limideal/parse.hpp"

#include <cctype>

namespace limideal {
namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    MonomialOrder ord;

    explicit Parser(const std::string& text, int nvars)
        : s(text), ord(MonomialOrder::degrevlex(nvars)) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw user_error(errc::parse_error,
                         msg + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }

    long integer() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            ++i;
        }
        return v;
    }

    EPoly expr() {
        EPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    EPoly term() {
        EPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                EPoly d = unary();
                if (!d.is_constant()) fail("division only by constants");
                if (d.is_zero()) fail("division by zero");
                EpsPoly c = d.is_zero() ? EpsPoly() : d.terms()[0].c;
                if (c.degree() > 0) fail("division only by rational constants");
                std::vector<Term<EpsPoly>> ts;
                for (auto& t : acc.terms()) {
                    std::vector<Rational> cv = t.c.coeffs();
                    for (auto& r : cv) r /= c.at_zero();
                    ts.push_back({t.m, EpsPoly(std::move(cv))});
                }
                acc = EPoly::from_terms(ord, std::move(ts));
            } else {
                return acc;
            }
        }
    }

    EPoly unary() {
        if (eat('-')) return -unary();
        return power();
    }

    EPoly power() {
        EPoly base = primary();
        if (eat('^')) {
            long k = integer();
            if (k > 64) fail("exponent too large");
            return base.pow(static_cast<int>(k));
        }
        return base;
    }

    EPoly primary() {
        char c = peek();
        if (c == '(') {
            ++i;
            EPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return EPoly(ord, EpsPoly(Rational(v)));
        }
        if (c == 'e') {
            ++i;
            if (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i])))
                fail("unknown identifier");
            return EPoly(ord, EpsPoly::eps());
        }
        if (c == 'z') {
            ++i;
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) fail("expected variable index after 'z'");
            int idx = std::stoi(s.substr(start, i - start));
            if (idx < 1 || idx > ord.vars())
                throw user_error(errc::variable_count_mismatch,
                                 "variable z" + std::to_string(idx) + " outside ring with " +
                                     std::to_string(ord.vars()) + " variables");
            return EPoly::variable(ord, idx - 1);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

EPoly parse_poly(const std::string& text, int nvars) {
    Parser p(text, nvars);
    EPoly r = p.expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

QPoly parse_qpoly(const std::string& text, int nvars) {
    EPoly p = parse_poly(text, nvars);
    for (auto& t : p.terms())
        if (t.c.degree() > 0)
            throw user_error(errc::parse_error, "parameter not allowed here: " + text);
    return eval_parameter_zero(p);
}

}  // namespace limideal
