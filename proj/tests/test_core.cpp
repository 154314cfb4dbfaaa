#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "limideal/parse.hpp"
#include "limideal/poly.hpp"
#include "oracle.hpp"

using namespace limideal;

static std::vector<MonomialOrder> catalogue_orders(int n) {
    std::vector<MonomialOrder> out = {MonomialOrder::degrevlex(n), MonomialOrder::lex(n)};
    if (n >= 2) {
        out.push_back(MonomialOrder::elim_block(n, 1));
        std::vector<long> w;
        for (int i = 0; i < n; ++i) w.push_back(i + 1);
        out.push_back(MonomialOrder::weighted_degrevlex(w));
    }
    return out;
}

TEST_CASE("orders are strict total orders compatible with multiplication") {
    for (int n = 2; n <= 3; ++n) {
        auto mons = oracle::monomials_below(n, n == 2 ? 6 : 4);
        for (const MonomialOrder& ord : catalogue_orders(n)) {
            for (auto& a : mons) CHECK(ord.cmp(a, a) == 0);
            for (auto& a : mons)
                for (auto& b : mons) CHECK(ord.cmp(a, b) == -ord.cmp(b, a));
            // transitivity through sorting: sorted sequence must be pairwise ordered
            auto sorted = mons;
            std::sort(sorted.begin(), sorted.end(),
                      [&](const ExpVec& a, const ExpVec& b) { return ord.less(a, b); });
            for (size_t i = 0; i < sorted.size(); ++i)
                for (size_t j = i + 1; j < sorted.size(); ++j)
                    CHECK(!ord.greater(sorted[i], sorted[j]));
            // 1 is the least monomial
            ExpVec one(n);
            for (auto& a : mons)
                if (a.deg > 0) CHECK(ord.less(one, a));
            // translation invariance
            ExpVec c = ExpVec::unit(n, 0, 2) * ExpVec::unit(n, n - 1, 1);
            for (auto& a : mons)
                for (auto& b : mons) CHECK(ord.cmp(a, b) == ord.cmp(a * c, b * c));
        }
    }
}

TEST_CASE("degrevlex refines total degree, lex ignores it") {
    MonomialOrder drl = MonomialOrder::degrevlex(2), lex = MonomialOrder::lex(2);
    ExpVec z1 = ExpVec::unit(2, 0), z2_5 = ExpVec::unit(2, 1, 5);
    CHECK(drl.less(z1, z2_5));
    CHECK(lex.greater(z1, z2_5));
    // degrevlex tie-break: among degree 2, z1^2 > z1 z2 > z2^2
    ExpVec a{2, 0}, b{1, 1}, c{0, 2};
    CHECK(drl.greater(a, b));
    CHECK(drl.greater(b, c));
}

TEST_CASE("polynomial arithmetic is a commutative ring") {
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    std::mt19937_64 rng(7);
    auto rnd = [&]() {
        QPoly p = QPoly::monomial(ord, ExpVec(2), Rational(0));
        for (int t = 0; t < 4; ++t) {
            ExpVec m(2);
            m.set(0, static_cast<int>(rng() % 4));
            m.set(1, static_cast<int>(rng() % 4));
            long c = static_cast<long>(rng() % 11) - 5;
            p = p + QPoly::monomial(ord, m, Rational(c));
        }
        return p;
    };
    for (int it = 0; it < 40; ++it) {
        QPoly f = rnd(), g = rnd(), h = rnd();
        CHECK(f * g == g * f);
        CHECK(f + g == g + f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f - f).is_zero());
        CHECK(f + (-f) == f - f);
    }
}

TEST_CASE("parser accepts its own rendering") {
    const char* samples[] = {"z1^2*z2 + z1*z2^2", "z1^4 + z2^4",         "z1 - z2",
                             "1/2*z1^2 - 3*z2",   "z1^2 - 2*z1*z2 + z2^2"};
    for (const char* s : samples) {
        QPoly p = parse_qpoly(s, 2);
        CHECK(parse_qpoly(p.str(), 2) == p);
    }
    MonomialOrder ord = MonomialOrder::degrevlex(3);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        QPoly p = QPoly::monomial(ord, ExpVec(3), Rational(0));
        for (int t = 0; t < 5; ++t) {
            ExpVec m(3);
            for (int i = 0; i < 3; ++i) m.set(i, static_cast<int>(rng() % 3));
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + static_cast<long>(rng() % 3);
            p = p + QPoly::monomial(ord, m, Rational(num, den));
        }
        if (p.is_zero()) continue;
        CHECK(parse_qpoly(p.str(), 3) == p);
    }
}

TEST_CASE("parser algebra matches poly algebra") {
    QPoly a = parse_qpoly("(z1+z2)^3", 2);
    QPoly b = parse_qpoly("z1^3 + 3*z1^2*z2 + 3*z1*z2^2 + z2^3", 2);
    CHECK(a == b);
    CHECK(parse_qpoly("(z1-z2)*(z1+z2)", 2) == parse_qpoly("z1^2 - z2^2", 2));
    CHECK(parse_qpoly("z1/2 + z1/2", 2) == parse_qpoly("z1", 2));
    CHECK(parse_qpoly("0", 2).is_zero());
    CHECK(parse_qpoly("2^3", 2) == parse_qpoly("8", 2));
}

TEST_CASE("parameter coefficients parse into the expected places") {
    EPoly p = parse_poly("e^2*z1 + (1+e)*z2", 2);
    CHECK(p.terms().size() == 2);
    EPoly q = parse_poly("z1^2 - e*z1", 2);
    CHECK(q.terms().size() == 2);
    // 'e' is the parameter, not a variable name prefix
    CHECK_THROWS_AS(parse_poly("e1", 2), user_error);
}

TEST_CASE("parse rejections carry the right code") {
    auto code_of = [](const char* s, int n) {
        try {
            parse_poly(s, n);
        } catch (const user_error& e) {
            return e.code;
        }
        return errc::internal_assertion;
    };
    CHECK(code_of("z1^", 2) == errc::parse_error);
    CHECK(code_of("z0", 2) == errc::variable_count_mismatch);
    CHECK(code_of("z3", 2) == errc::variable_count_mismatch);
    CHECK(code_of("(z1", 2) == errc::parse_error);
    CHECK(code_of("z1^65", 2) == errc::parse_error);
    CHECK(code_of("z1/z2", 2) == errc::parse_error);
    CHECK(code_of("1/0", 2) == errc::parse_error);
    CHECK(code_of("", 2) == errc::parse_error);
    CHECK(code_of("z1 $ z2", 2) == errc::parse_error);
}

TEST_CASE("rational helpers") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(rational_from_string("-3/4") == Rational(-3, 4));
    CHECK_THROWS_AS(rational_from_string("x"), user_error);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(5) == 120);
    CHECK(lcm(Int(4), Int(6)) == 12);
    CHECK(is_integer(Rational(4, 2)));
    CHECK(!is_integer(Rational(1, 2)));
}
