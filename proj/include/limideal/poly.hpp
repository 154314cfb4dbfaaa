#pragma once

// Multivariate polynomials over a coefficient ring K, terms kept strictly
// descending under the order stored in the polynomial.  Binary operations
// require both sides to carry the same order.

#include <algorithm>
#include <string>
#include <vector>

#include "limideal/eps.hpp"
#include "limideal/monomial.hpp"

namespace limideal {

template <class K>
struct Term {
    ExpVec m;
    K c;
};

template <class K>
class Poly {
  public:
    Poly() : ord_(MonomialOrder::degrevlex(0)) {}
    explicit Poly(MonomialOrder ord) : ord_(std::move(ord)) {}
    Poly(MonomialOrder ord, const K& constant) : ord_(std::move(ord)) {
        if (!field_ops<K>::is_zero(constant)) t_.push_back({ExpVec(ord_.vars()), constant});
    }
    static Poly monomial(MonomialOrder ord, ExpVec m, K c) {
        Poly p(std::move(ord));
        if (!field_ops<K>::is_zero(c)) p.t_.push_back({m, std::move(c)});
        return p;
    }
    static Poly variable(const MonomialOrder& ord, int i, int power = 1) {
        return monomial(ord, ExpVec::unit(ord.vars(), i, power), field_ops<K>::one());
    }
    static Poly from_terms(MonomialOrder ord, std::vector<Term<K>> terms) {
        Poly p(std::move(ord));
        p.t_ = std::move(terms);
        p.normalize();
        return p;
    }

    const MonomialOrder& order() const { return ord_; }
    int vars() const { return ord_.vars(); }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::vector<Term<K>>& terms() const { return t_; }

    const ExpVec& lead_monomial() const { return t_.front().m; }
    const K& lead_coeff() const { return t_.front().c; }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

    int total_degree() const {
        int d = -1;
        for (auto& t : t_) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }
    bool is_homogeneous() const {
        for (auto& t : t_)
            if (t.m.deg != t_[0].m.deg) return false;
        return true;
    }
    // sum of the terms of maximal total degree
    Poly top_form() const {
        Poly r(ord_);
        auto d = static_cast<uint32_t>(total_degree());
        for (auto& t : t_)
            if (t.m.deg == d) r.t_.push_back(t);
        return r;
    }

    Poly reordered(const MonomialOrder& ord) const {
        Poly r(ord);
        r.t_ = t_;
        std::sort(r.t_.begin(), r.t_.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, true); }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& t : r.t_) t.c = K(0) - t.c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.ord_);
        if (a.is_zero() || b.is_zero()) return r;
        r.t_.reserve(a.t_.size() * b.t_.size());
        for (auto& s : a.t_)
            for (auto& t : b.t_) r.t_.push_back({s.m * t.m, s.c * t.c});
        r.normalize();
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const K& c) const {
        Poly r(ord_);
        if (field_ops<K>::is_zero(c)) return r;
        r.t_ = t_;
        for (auto& t : r.t_) t.c = t.c * c;
        return r;
    }
    Poly times_monomial(const ExpVec& m, const K& c) const {
        Poly r(ord_);
        if (field_ops<K>::is_zero(c)) return r;
        r.t_ = t_;
        for (auto& t : r.t_) {
            t.m = t.m * m;
            t.c = t.c * c;
        }
        return r;
    }
    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        K inv = field_ops<K>::inv(r.t_.front().c);
        for (auto& t : r.t_) t.c = t.c * inv;
        return r;
    }
    Poly pow(int k) const {
        Poly r(ord_, field_ops<K>::one());
        Poly base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return r;
    }

    K eval(const std::vector<K>& point) const {
        K acc(0);
        for (auto& t : t_) {
            K v = t.c;
            for (int i = 0; i < vars(); ++i)
                for (int k = 0; k < t.m.e[i]; ++k) v = v * point[i];
            acc = acc + v;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].m != b.t_[i].m || !(a.t_[i].c == b.t_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // total order for canonical generator lists: by leading monomial, then
    // recursively on the tails
    friend bool term_order_less(const Poly& a, const Poly& b) {
        size_t i = 0;
        for (; i < a.t_.size() && i < b.t_.size(); ++i) {
            int c = a.ord_.cmp(a.t_[i].m, b.t_[i].m);
            if (c != 0) return c < 0;
        }
        return a.t_.size() < b.t_.size();
    }

    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    static Poly merged(const Poly& a, const Poly& b, bool subtract) {
        Poly r(a.ord_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() && j < b.t_.size()) {
            int c = a.ord_.cmp(a.t_[i].m, b.t_[j].m);
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                auto t = b.t_[j++];
                if (subtract) t.c = K(0) - t.c;
                r.t_.push_back(std::move(t));
            } else {
                K c2 = subtract ? K(a.t_[i].c - b.t_[j].c) : K(a.t_[i].c + b.t_[j].c);
                if (!field_ops<K>::is_zero(c2)) r.t_.push_back({a.t_[i].m, std::move(c2)});
                ++i;
                ++j;
            }
        }
        for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
        for (; j < b.t_.size(); ++j) {
            auto t = b.t_[j];
            if (subtract) t.c = K(0) - t.c;
            r.t_.push_back(std::move(t));
        }
        return r;
    }

    void normalize() {
        std::sort(t_.begin(), t_.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord_.greater(a.m, b.m); });
        std::vector<Term<K>> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c = out.back().c + t.c;
            else
                out.push_back(t);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term<K>& t) { return field_ops<K>::is_zero(t.c); }),
                  out.end());
        t_ = std::move(out);
    }

    MonomialOrder ord_;
    std::vector<Term<K>> t_;
};

template <class K>
std::string Poly<K>::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    auto var_name = [&](int i) {
        return i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i + 1);
    };
    std::string out;
    bool first = true;
    for (auto& t : t_) {
        std::string cs = field_ops<K>::str(t.c);
        bool lead_minus = !cs.empty() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
        if (first) {
            first = false;
            if (lead_minus) {
                out += "-";
                cs = cs.substr(1);
            }
        } else if (lead_minus) {
            out += " - ";
            cs = cs.substr(1);
        } else {
            out += " + ";
        }
        std::string mono;
        for (int i = 0; i < vars(); ++i) {
            if (!t.m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
        }
        bool unit_coeff = cs == "1";
        if (mono.empty()) {
            out += cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
        } else if (unit_coeff) {
            out += mono;
        } else {
            if (cs.find(' ') != std::string::npos || cs[0] == '-')
                cs = "(" + cs + ")";
            out += cs + "*" + mono;
        }
    }
    return out;
}

using QPoly = Poly<Rational>;
using EPoly = Poly<EpsPoly>;          // coefficients polynomial in the parameter
using FPoly = Poly<EpsRationalFn>;    // coefficients rational in the parameter

// ---- conversions between coefficient rings and adjoined-variable rings ----

// Q[e][z] -> Q(e)[z]
inline FPoly to_rational_fn(const EPoly& p) {
    std::vector<Term<EpsRationalFn>> ts;
    ts.reserve(p.terms().size());
    for (auto& t : p.terms()) ts.push_back({t.m, EpsRationalFn(t.c)});
    return FPoly::from_terms(p.order(), std::move(ts));
}

// Q[e][z] -> Q[z] by evaluating the parameter at 0
inline QPoly eval_parameter_zero(const EPoly& p) {
    std::vector<Term<Rational>> ts;
    for (auto& t : p.terms()) {
        Rational c = t.c.at_zero();
        if (c != 0) ts.push_back({t.m, c});
    }
    return QPoly::from_terms(p.order(), std::move(ts));
}

// Q[e][z] -> Q[z, e]: the parameter becomes the last ring variable
inline QPoly adjoin_parameter_back(const EPoly& p, const MonomialOrder& big_ord) {
    std::vector<Term<Rational>> ts;
    for (auto& t : p.terms()) {
        ExpVec base = t.m.widened_back();
        for (size_t k = 0; k < t.c.coeffs().size(); ++k) {
            if (t.c.coeffs()[k] == 0) continue;
            ExpVec m = base;
            m.set(t.m.vars(), static_cast<int>(k));
            ts.push_back({m, t.c.coeffs()[k]});
        }
    }
    return QPoly::from_terms(big_ord, std::move(ts));
}

// Q[z, e] -> Q[e][z]: collect the last variable into the coefficient
inline EPoly collect_parameter_back(const QPoly& p, const MonomialOrder& small_ord) {
    std::vector<Term<EpsPoly>> ts;
    for (auto& t : p.terms()) {
        int k = t.m.e[p.vars() - 1];
        ExpVec m = t.m.narrowed_back();
        std::vector<Rational> c(k + 1);
        c[k] = t.c;
        ts.push_back({m, EpsPoly(std::move(c))});
    }
    return EPoly::from_terms(small_ord, std::move(ts));
}

// K[z] -> K[z, w] (new last variable absent) under the given wider order
template <class K>
Poly<K> widen_back(const Poly<K>& p, const MonomialOrder& big_ord) {
    std::vector<Term<K>> ts;
    for (auto& t : p.terms()) ts.push_back({t.m.widened_back(), t.c});
    return Poly<K>::from_terms(big_ord, std::move(ts));
}

// substitute 0 for the last variable and drop it
template <class K>
Poly<K> substitute_zero_back(const Poly<K>& p, const MonomialOrder& small_ord) {
    std::vector<Term<K>> ts;
    for (auto& t : p.terms())
        if (t.m.e[p.vars() - 1] == 0) ts.push_back({t.m.narrowed_back(), t.c});
    return Poly<K>::from_terms(small_ord, std::move(ts));
}

// drop a front variable that no term uses
template <class K>
Poly<K> narrow_front(const Poly<K>& p, const MonomialOrder& small_ord) {
    std::vector<Term<K>> ts;
    for (auto& t : p.terms()) {
        if (t.m.e[0] != 0)
            throw internal_error(errc::internal_assertion, "narrow_front: variable present");
        ts.push_back({t.m.narrowed_front(), t.c});
    }
    return Poly<K>::from_terms(small_ord, std::move(ts));
}

// clear denominators: smallest monic multiplier L with L*p polynomial in the
// parameter; returns the cleared polynomial
inline EPoly clear_denominators(const FPoly& p, const MonomialOrder& ord) {
    EpsPoly L(1);
    for (auto& t : p.terms()) {
        EpsPoly g = gcd(L, t.c.den());
        L = div_exact(L * t.c.den(), g).monic();
    }
    std::vector<Term<EpsPoly>> ts;
    for (auto& t : p.terms()) ts.push_back({t.m, t.c.num() * div_exact(L, t.c.den())});
    return EPoly::from_terms(ord, std::move(ts));
}

// divide out the gcd of all coefficient polynomials (parameter content
// included), clear rational denominators, divide by integer content, and fix
// the sign of the leading coefficient's top rational.  The result generates
// the same ideal over Q[e] up to units and is canonical.
inline EPoly primitive_part(const EPoly& p) {
    if (p.is_zero()) return p;
    EpsPoly g;
    for (auto& t : p.terms()) g = gcd(g, t.c);
    std::vector<Term<EpsPoly>> ts;
    Int den_lcm = 1, num_gcd = 0;
    for (auto& t : p.terms()) {
        EpsPoly c = div_exact(t.c, g);
        for (auto& r : c.coeffs()) {
            den_lcm = lcm(den_lcm, rat_den(r));
            num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(r));
        }
        ts.push_back({t.m, std::move(c)});
    }
    if (num_gcd == 0) num_gcd = 1;
    Rational scale(den_lcm, num_gcd);
    // sign: top rational coefficient of the leading term positive
    if (ts.front().c.lead() * scale < 0) scale = -scale;
    for (auto& t : ts) {
        std::vector<Rational> c = t.c.coeffs();
        for (auto& r : c) r *= scale;
        t.c = EpsPoly(std::move(c));
    }
    return EPoly::from_terms(p.order(), std::move(ts));
}

}  // namespace limideal
