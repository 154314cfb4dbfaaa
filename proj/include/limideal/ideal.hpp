#pragma once

// Ideals with cached reduced Groebner bases, one per monomial order.
// Operations that change the generating set return fresh ideals.

#include <map>
#include <string>
#include <vector>

#include "limideal/groebner.hpp"

namespace limideal {

inline std::string order_cache_key(const MonomialOrder& ord) {
    std::string k = std::to_string(static_cast<int>(ord.kind())) + ":" +
                    std::to_string(ord.vars()) + ":" + std::to_string(ord.block());
    for (long w : ord.weights()) k += ":" + std::to_string(w);
    return k;
}

// counts[d] = number of monomials of degree d (d < cap) outside the ideal
// generated by the given leading monomials
inline std::vector<long> standard_monomial_degree_counts(const std::vector<ExpVec>& lms,
                                                         int nvars, int cap) {
    std::vector<long> counts(cap, 0);
    ExpVec cur(nvars);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            for (auto& m : lms)
                if (divides(m, cur)) return;
            ++counts[cur.deg];
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur.set(var, k);
            self(self, var + 1, remaining - k);
        }
        cur.set(var, 0);
    };
    if (nvars == 0 || cap <= 0) return counts;
    rec(rec, 0, cap - 1);
    return counts;
}

template <class K>
class Ideal {
  public:
    Ideal() = default;
    Ideal(int nvars, std::vector<Poly<K>> gens, GroebnerOptions opt = {})
        : nvars_(nvars), gens_(std::move(gens)), opt_(opt) {
        gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                                   [](const Poly<K>& g) { return g.is_zero(); }),
                    gens_.end());
    }

    int vars() const { return nvars_; }
    const std::vector<Poly<K>>& gens() const { return gens_; }
    const GroebnerOptions& options() const { return opt_; }
    void set_options(const GroebnerOptions& o) { opt_ = o; }
    bool is_trivial_zero() const { return gens_.empty(); }

    MonomialOrder default_order() const { return MonomialOrder::degrevlex(nvars_); }

    const std::vector<Poly<K>>& groebner(const MonomialOrder& ord) const {
        auto key = order_cache_key(ord);
        auto it = gb_.find(key);
        if (it != gb_.end()) return it->second;
        std::vector<Poly<K>> in;
        in.reserve(gens_.size());
        for (auto& g : gens_) in.push_back(g.order() == ord ? g : g.reordered(ord));
        auto gb = groebner_basis(in, ord, opt_);
        return gb_.emplace(std::move(key), std::move(gb)).first->second;
    }
    const std::vector<Poly<K>>& groebner() const { return groebner(default_order()); }

    bool contains(const Poly<K>& f) const {
        Poly<K> g = f.order() == default_order() ? f : f.reordered(default_order());
        return in_ideal(g, groebner());
    }
    bool contains_ideal(const Ideal& other) const {
        for (auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }
    friend bool operator==(const Ideal& a, const Ideal& b) {
        if (a.nvars_ != b.nvars_) return false;
        auto& ga = a.groebner();
        auto& gb = b.groebner();
        if (ga.size() != gb.size()) return false;
        for (size_t i = 0; i < ga.size(); ++i)
            if (ga[i] != gb[i]) return false;
        return true;
    }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

    // replace the generators by the reduced degrevlex basis
    Ideal canonicalized() const { return Ideal(nvars_, groebner(), opt_); }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        std::vector<Poly<K>> g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        return Ideal(a.nvars_, std::move(g), a.opt_);
    }
    friend Ideal operator*(const Ideal& a, const Ideal& b) {
        std::vector<Poly<K>> g;
        g.reserve(a.gens_.size() * b.gens_.size());
        for (auto& f : a.gens_)
            for (auto& h : b.gens_) g.push_back(f * h);
        return Ideal(a.nvars_, std::move(g), a.opt_);
    }

    // p-th power, canonicalizing between steps to keep generator counts small
    Ideal power(int p) const {
        if (p == 0)
            return Ideal(nvars_, {Poly<K>(default_order(), field_ops<K>::one())}, opt_);
        Ideal base = canonicalized();
        Ideal acc = base;
        for (int k = 1; k < p; ++k) acc = (acc * base).canonicalized();
        return acc;
    }

    // smallest d with z_i^d in the leading-term ideal, or -1
    int pure_power_degree(int var) const {
        int best = -1;
        for (auto& g : groebner()) {
            const ExpVec& m = g.lead_monomial();
            if (static_cast<uint32_t>(m.e[var]) != m.deg) continue;
            if (best < 0 || m.e[var] < best) best = m.e[var];
        }
        return best;
    }
    bool is_zero_dimensional() const {
        if (gens_.empty()) return nvars_ == 0;
        for (int i = 0; i < nvars_; ++i)
            if (pure_power_degree(i) < 0) return false;
        return true;
    }

    // monomials outside the leading-term ideal; requires zero-dimensionality
    std::vector<ExpVec> standard_monomials() const {
        if (!is_zero_dimensional())
            throw user_error(errc::not_zero_dimensional,
                             "quotient is not finite dimensional");
        std::vector<int> box(nvars_);
        for (int i = 0; i < nvars_; ++i) box[i] = pure_power_degree(i);
        std::vector<ExpVec> lms;
        for (auto& g : groebner()) lms.push_back(g.lead_monomial());
        std::vector<ExpVec> out;
        ExpVec cur(nvars_);
        auto rec = [&](auto&& self, int var) -> void {
            if (var == nvars_) {
                for (auto& m : lms)
                    if (divides(m, cur)) return;
                out.push_back(cur);
                return;
            }
            for (int k = 0; k < box[var]; ++k) {
                cur.set(var, k);
                self(self, var + 1);
            }
            cur.set(var, 0);
        };
        if (nvars_ == 0) return out;
        rec(rec, 0);
        return out;
    }

    long colength() const { return static_cast<long>(standard_monomials().size()); }

    // an ideal is monomial iff its reduced basis consists of monomials;
    // those leading monomials are then its unique minimal generators
    bool is_monomial() const {
        for (auto& g : groebner())
            if (!g.is_monomial()) return false;
        return true;
    }
    std::vector<ExpVec> minimal_monomial_generators() const {
        std::vector<ExpVec> out;
        for (auto& g : groebner()) out.push_back(g.lead_monomial());
        return out;
    }

    // ideal generated by the top-degree forms of the reduced degrevlex basis
    Ideal top_form_ideal() const {
        std::vector<Poly<K>> g;
        for (auto& f : groebner()) g.push_back(f.top_form());
        return Ideal(nvars_, std::move(g), opt_);
    }

    Ideal plus_maximal_power(int D) const {
        std::vector<Poly<K>> g = gens_;
        for (auto& m : monomials_of_degree(nvars_, D))
            g.push_back(Poly<K>::monomial(default_order(), m, field_ops<K>::one()));
        return Ideal(nvars_, std::move(g), opt_);
    }

  private:
    int nvars_ = 0;
    std::vector<Poly<K>> gens_;
    GroebnerOptions opt_;
    mutable std::map<std::string, std::vector<Poly<K>>> gb_;
};

using QIdeal = Ideal<Rational>;
using FIdeal = Ideal<EpsRationalFn>;

// ---- elimination-based constructions ----
// The auxiliary variable is adjoined at the front so block orders can compare
// it first; generators must already live in the widened ring.

template <class K>
Poly<K> widen_front_any(const Poly<K>& p, const MonomialOrder& big_ord) {
    std::vector<Term<K>> ts;
    for (auto& t : p.terms()) ts.push_back({t.m.widened_front(), t.c});
    return Poly<K>::from_terms(big_ord, std::move(ts));
}

template <class K>
std::vector<Poly<K>> eliminate_front_variable(const std::vector<Poly<K>>& gens_wide,
                                              const GroebnerOptions& opt) {
    int nv = gens_wide.empty() ? 0 : gens_wide.front().vars();
    MonomialOrder elim = MonomialOrder::elim_block(nv, 1);
    MonomialOrder small = MonomialOrder::degrevlex(nv - 1);
    auto gb = groebner_basis(gens_wide, elim, opt);
    std::vector<Poly<K>> out;
    for (auto& g : gb)
        if (g.lead_monomial().e[0] == 0) out.push_back(narrow_front(g, small));
    return out;
}

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
    int nv = a.vars();
    MonomialOrder big = MonomialOrder::elim_block(nv + 1, 1);
    Poly<K> t = Poly<K>::variable(big, 0);
    Poly<K> one(big, field_ops<K>::one());
    std::vector<Poly<K>> gens;
    for (auto& f : a.gens())
        gens.push_back(t * widen_front_any(f, big));
    for (auto& g : b.gens())
        gens.push_back((one - t) * widen_front_any(g, big));
    return Ideal<K>(nv, eliminate_front_variable(gens, a.options()), a.options());
}

// I : f^infinity via a front auxiliary variable and the relation 1 - t*f
template <class K>
Ideal<K> saturate(const Ideal<K>& a, const Poly<K>& f) {
    int nv = a.vars();
    MonomialOrder big = MonomialOrder::elim_block(nv + 1, 1);
    Poly<K> t = Poly<K>::variable(big, 0);
    Poly<K> one(big, field_ops<K>::one());
    std::vector<Poly<K>> gens;
    for (auto& g : a.gens()) gens.push_back(widen_front_any(g, big));
    gens.push_back(one - t * widen_front_any(f, big));
    return Ideal<K>(nv, eliminate_front_variable(gens, a.options()), a.options());
}

// dimension of Q[z]/(J + m^T), computed entirely modulo m^T in the integer lane
inline long truncated_colength(const std::vector<QPoly>& gens, int nvars, long T,
                               GroebnerOptions opt) {
    opt.truncate_degree = T;
    opt.degree_cap = -1;
    auto G = z_buchberger(gens, MonomialOrder::degrevlex(nvars), opt);
    std::vector<ExpVec> lms;
    for (auto& g : G) lms.push_back(g.lead_monomial());
    // keep only minimal leading monomials before the lattice walk
    std::sort(lms.begin(), lms.end(),
              [](const ExpVec& a, const ExpVec& b) { return a.deg < b.deg; });
    std::vector<ExpVec> min_lms;
    for (auto& m : lms) {
        bool covered = false;
        for (auto& h : min_lms)
            if (divides(h, m)) {
                covered = true;
                break;
            }
        if (!covered) min_lms.push_back(m);
    }
    long total = 0;
    for (long c : standard_monomial_degree_counts(min_lms, nvars, static_cast<int>(T)))
        total += c;
    return total;
}

template <class K>
Ideal<K> point_ideal(const std::vector<K>& coords, const GroebnerOptions& opt = {}) {
    int nv = static_cast<int>(coords.size());
    MonomialOrder ord = MonomialOrder::degrevlex(nv);
    std::vector<Poly<K>> gens;
    for (int i = 0; i < nv; ++i)
        gens.push_back(Poly<K>::variable(ord, i) - Poly<K>(ord, coords[i]));
    return Ideal<K>(nv, std::move(gens), opt);
}

template <class K>
Ideal<K> intersect_point_ideals(const std::vector<std::vector<K>>& points,
                                const GroebnerOptions& opt = {}) {
    if (points.empty())
        throw user_error(errc::config_error, "no points given");
    Ideal<K> acc = point_ideal(points[0], opt);
    for (size_t i = 1; i < points.size(); ++i)
        acc = intersect(acc, point_ideal(points[i], opt)).canonicalized();
    return acc;
}

}  // namespace limideal
