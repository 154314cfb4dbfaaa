#pragma once

// Exact rational scalar. cpp_rational keeps gcd(num,den) = 1 and den > 0.

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

#include "limideal/errors.hpp"

namespace limideal {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string to_string(const Int& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

// "3", "-3/4". Used by config files; the polynomial parser has its own lexer.
inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw user_error(errc::parse_error, "bad rational literal '" + s + "'");
    }
}

inline Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

// binomial(n, k) as arbitrary-precision integer
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace limideal
