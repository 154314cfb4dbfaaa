#pragma once

// Univariate polynomials and rational functions in the deformation parameter.
// EpsPoly: dense coefficients by ascending power, highest stored coefficient
// nonzero (zero polynomial = empty vector).
// EpsRationalFn: num/den with den monic and gcd(num, den) = 1.

#include <string>
#include <vector>

#include "limideal/errors.hpp"
#include "limideal/rational.hpp"

namespace limideal {

class EpsPoly {
  public:
    EpsPoly() = default;
    EpsPoly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    EpsPoly(long c) : EpsPoly(Rational(c)) {}
    // coefficients by ascending power
    explicit EpsPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static EpsPoly eps(int power = 1) {
        std::vector<Rational> v(power + 1);
        v[power] = 1;
        return EpsPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](size_t i) const {
        static const Rational zero{0};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational at_zero() const { return c_.empty() ? Rational(0) : c_[0]; }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    // largest k with eps^k dividing this (0 for the zero polynomial)
    int content_power() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0;
    }

    EpsPoly shifted_down(int k) const {  // divide by eps^k, must be exact
        if (k == 0) return *this;
        std::vector<Rational> v(c_.begin() + k, c_.end());
        return EpsPoly(std::move(v));
    }

    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
        return EpsPoly(std::move(v));
    }
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
        return EpsPoly(std::move(v));
    }
    friend EpsPoly operator-(const EpsPoly& a) {
        std::vector<Rational> v(a.c_);
        for (auto& x : v) x = -x;
        return EpsPoly(std::move(v));
    }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return EpsPoly(std::move(v));
    }
    EpsPoly& operator+=(const EpsPoly& b) { return *this = *this + b; }
    EpsPoly& operator-=(const EpsPoly& b) { return *this = *this - b; }
    EpsPoly& operator*=(const EpsPoly& b) { return *this = *this * b; }

    friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const EpsPoly& a, const EpsPoly& b) { return !(a == b); }

    // euclidean division, returns (quotient, remainder)
    friend std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b) {
        if (b.is_zero()) throw internal_error(errc::division_by_zero, "EpsPoly divmod by zero");
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q;
        int db = b.degree();
        if (a.degree() >= db) q.assign(a.degree() - db + 1, Rational(0));
        for (int d = a.degree(); d >= db; --d) {
            if (r[d] == 0) continue;
            Rational f = r[d] / b.c_.back();
            q[d - db] = f;
            for (int i = 0; i <= db; ++i) r[d - db + i] -= f * b.c_[i];
        }
        return {EpsPoly(std::move(q)), EpsPoly(std::move(r))};
    }

    friend EpsPoly div_exact(const EpsPoly& a, const EpsPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw internal_error(errc::internal_assertion, "EpsPoly division not exact");
        return q;
    }

    EpsPoly monic() const {
        if (is_zero()) return {};
        std::vector<Rational> v(c_);
        Rational l = c_.back();
        for (auto& x : v) x /= l;
        return EpsPoly(std::move(v));
    }

    EpsPoly pow(int k) const {
        EpsPoly r(1), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return r;
    }

    // ascending powers: "1 - e + 2*e^3"
    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// monic gcd; gcd(0, 0) = 0
inline EpsPoly gcd(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

inline std::string EpsPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rational ac = neg ? Rational(-c) : c;
        std::string cs = to_string(ac);
        if (i == 0) {
            out += cs;
        } else {
            if (ac != 1) out += cs + "*";
            out += "e";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

class EpsRationalFn {
  public:
    EpsRationalFn() = default;
    EpsRationalFn(const EpsPoly& n) : num_(n), den_(1) {}
    EpsRationalFn(const Rational& c) : num_(c), den_(1) {}
    EpsRationalFn(long c) : num_(Rational(c)), den_(1) {}
    EpsRationalFn(EpsPoly n, EpsPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero())
            throw user_error(errc::division_by_zero, "rational function with zero denominator");
        normalize();
    }

    const EpsPoly& num() const { return num_; }
    const EpsPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend EpsRationalFn operator+(const EpsRationalFn& a, const EpsRationalFn& b) {
        return EpsRationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend EpsRationalFn operator-(const EpsRationalFn& a, const EpsRationalFn& b) {
        return EpsRationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend EpsRationalFn operator-(const EpsRationalFn& a) {
        EpsRationalFn r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend EpsRationalFn operator*(const EpsRationalFn& a, const EpsRationalFn& b) {
        return EpsRationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend EpsRationalFn operator/(const EpsRationalFn& a, const EpsRationalFn& b) {
        if (b.is_zero())
            throw internal_error(errc::division_by_zero, "rational function division by zero");
        return EpsRationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    EpsRationalFn& operator+=(const EpsRationalFn& b) { return *this = *this + b; }
    EpsRationalFn& operator-=(const EpsRationalFn& b) { return *this = *this - b; }
    EpsRationalFn& operator*=(const EpsRationalFn& b) { return *this = *this * b; }
    EpsRationalFn& operator/=(const EpsRationalFn& b) { return *this = *this / b; }

    friend bool operator==(const EpsRationalFn& a, const EpsRationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const EpsRationalFn& a, const EpsRationalFn& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.coeffs().size() > 1 || n.front() == '-') n = "(" + n + ")";
        if (den_.coeffs().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = EpsPoly(1);
            return;
        }
        EpsPoly g = limideal::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        Rational l = den_.lead();
        if (l != 1) {
            std::vector<Rational> nv = num_.coeffs(), dv = den_.coeffs();
            for (auto& x : nv) x /= l;
            for (auto& x : dv) x /= l;
            num_ = EpsPoly(std::move(nv));
            den_ = EpsPoly(std::move(dv));
        }
    }
    EpsPoly num_;
    EpsPoly den_{1};
};

// Coefficient-field traits used by the templated polynomial layer.
template <class K>
struct field_ops;

template <>
struct field_ops<Rational> {
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational one() { return Rational(1); }
    static Rational inv(const Rational& a) {
        if (a == 0) throw internal_error(errc::division_by_zero, "1/0 in Q");
        return 1 / a;
    }
    static std::string str(const Rational& a) { return to_string(a); }
    static bool needs_parens(const Rational& a) { return a < 0; }
    static constexpr bool is_field = true;
};

template <>
struct field_ops<EpsRationalFn> {
    static bool is_zero(const EpsRationalFn& a) { return a.is_zero(); }
    static EpsRationalFn one() { return EpsRationalFn(1); }
    static EpsRationalFn inv(const EpsRationalFn& a) { return EpsRationalFn(1) / a; }
    static std::string str(const EpsRationalFn& a) { return a.str(); }
    static bool needs_parens(const EpsRationalFn& a) {
        return !a.is_polynomial() || a.num().degree() > 0 || a.num().at_zero() < 0;
    }
    static constexpr bool is_field = true;
};

template <>
struct field_ops<EpsPoly> {
    static bool is_zero(const EpsPoly& a) { return a.is_zero(); }
    static EpsPoly one() { return EpsPoly(1); }
    static std::string str(const EpsPoly& a) { return a.str(); }
    static bool needs_parens(const EpsPoly& a) {
        return a.degree() > 0 || a.at_zero() < 0;
    }
    static constexpr bool is_field = false;  // ring only: no division in GB layer
};

template <>
struct field_ops<Int> {
    static bool is_zero(const Int& a) { return a == 0; }
    static Int one() { return Int(1); }
    static std::string str(const Int& a) { return to_string(a); }
    static bool needs_parens(const Int& a) { return a < 0; }
    static constexpr bool is_field = false;
};

}  // namespace limideal
