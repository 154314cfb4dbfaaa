#pragma once

// Buchberger's algorithm with the normal selection strategy: pairs are
// processed by increasing degree of the lcm of the leading monomials, FIFO
// among equal degrees.  The coprimality criterion is always applied; the
// chain criterion can be toggled (results must not depend on it).

#include <cstdint>
#include <queue>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "limideal/poly.hpp"

namespace limideal {

struct GroebnerOptions {
    // counted in S-polynomial reductions performed
    long step_budget = 200000;
    bool chain_criterion = true;
    // when >= 0: ignore S-pairs whose lcm has total degree >= degree_cap.
    // Sound only for homogeneous input under a degree-compatible order; the
    // result then generates the ideal in all degrees below the cap.
    long degree_cap = -1;
    // when >= 0: compute modulo all monomials of that degree (they are added
    // as generators and terms at or above it are discarded eagerly, which is
    // an ordinary reduction step).  Needs a degree-compatible order.
    long truncate_degree = -1;
};

template <class K>
Poly<K> truncated(const Poly<K>& p, long T) {
    if (T < 0) return p;
    std::vector<Term<K>> ts;
    for (auto& t : p.terms())
        if (t.m.deg < static_cast<uint32_t>(T)) ts.push_back(t);
    return Poly<K>::from_terms(p.order(), std::move(ts));
}

// full normal form: every term of the result is reducible by no element of G.
// With T >= 0, terms of degree >= T are discarded (valid when the ideal of G
// contains every monomial of degree T).
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& G, long T = -1) {
    Poly<K> rem = T >= 0 ? truncated(f, T) : f;
    std::vector<Term<K>> out;
    while (!rem.is_zero()) {
        const ExpVec& lm = rem.lead_monomial();
        bool reduced = false;
        for (auto& g : G) {
            if (g.is_zero() || !divides(g.lead_monomial(), lm)) continue;
            K c = rem.lead_coeff() * field_ops<K>::inv(g.lead_coeff());
            Poly<K> sub = g.times_monomial(quotient(lm, g.lead_monomial()), c);
            rem -= T >= 0 ? truncated(sub, T) : sub;
            reduced = true;
            break;
        }
        if (!reduced) {
            out.push_back(rem.terms().front());
            Poly<K> lt = Poly<K>::monomial(rem.order(), out.back().m, out.back().c);
            rem -= lt;
        }
    }
    return Poly<K>::from_terms(f.order(), std::move(out));
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    ExpVec l = lcm(f.lead_monomial(), g.lead_monomial());
    Poly<K> a = f.times_monomial(quotient(l, f.lead_monomial()),
                                 field_ops<K>::inv(f.lead_coeff()));
    Poly<K> b = g.times_monomial(quotient(l, g.lead_monomial()),
                                 field_ops<K>::inv(g.lead_coeff()));
    return a - b;
}

template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& gens, const MonomialOrder& ord,
                                const GroebnerOptions& opt = {}) {
    long T = opt.truncate_degree;
    if (T >= 0 && ord.kind() != OrderKind::degrevlex)
        throw internal_error(errc::internal_assertion, "truncation needs a graded order");
    std::vector<Poly<K>> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (opt.degree_cap >= 0) {
            if (ord.kind() != OrderKind::degrevlex || !g.is_homogeneous())
                throw internal_error(errc::internal_assertion,
                                     "degree cap needs homogeneous input and a graded order");
            if (g.total_degree() >= opt.degree_cap) continue;
        }
        Poly<K> h = g.order() == ord ? g : g.reordered(ord);
        if (T >= 0) h = truncated(h, T);
        if (!h.is_zero()) G.push_back(std::move(h));
    }
    if (T >= 0)
        for (auto& m : monomials_of_degree(ord.vars(), static_cast<int>(T)))
            G.push_back(Poly<K>::monomial(ord, m, field_ops<K>::one()));

    // (lcm degree, insertion sequence, i, j); smallest degree first, FIFO ties
    using Entry = std::tuple<uint32_t, uint64_t, uint32_t, uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::unordered_set<uint64_t> done;
    uint64_t seq = 0;
    auto key = [](uint32_t i, uint32_t j) {
        return (static_cast<uint64_t>(i) << 32) | j;
    };
    auto push_pair = [&](uint32_t i, uint32_t j) {
        // the S-polynomial of two single-term polynomials is identically zero
        if (G[i].is_monomial() && G[j].is_monomial()) return;
        uint32_t d = lcm(G[i].lead_monomial(), G[j].lead_monomial()).deg;
        if (opt.degree_cap >= 0 && d >= static_cast<uint32_t>(opt.degree_cap)) return;
        queue.emplace(d, seq++, i, j);
    };
    for (uint32_t j = 1; j < G.size(); ++j)
        for (uint32_t i = 0; i < j; ++i) push_pair(i, j);

    long reductions = 0;
    while (!queue.empty()) {
        auto [deg, s, i, j] = queue.top();
        queue.pop();
        (void)deg;
        (void)s;
        done.insert(key(i, j));
        if (coprime(G[i].lead_monomial(), G[j].lead_monomial())) continue;
        if (opt.chain_criterion && !(T >= 0 && (G[i].is_monomial() || G[j].is_monomial()))) {
            ExpVec l = lcm(G[i].lead_monomial(), G[j].lead_monomial());
            bool skip = false;
            for (uint32_t k = 0; k < G.size() && !skip; ++k) {
                if (k == i || k == j || !divides(G[k].lead_monomial(), l)) continue;
                uint32_t a1 = std::min(i, k), b1 = std::max(i, k);
                uint32_t a2 = std::min(j, k), b2 = std::max(j, k);
                if (done.count(key(a1, b1)) && done.count(key(a2, b2))) skip = true;
            }
            if (skip) continue;
        }
        if (++reductions > opt.step_budget)
            throw user_error(errc::step_budget_exceeded,
                             "basis computation exceeded the step budget of " +
                                 std::to_string(opt.step_budget));
        Poly<K> r = normal_form(s_polynomial(G[i], G[j]), G, T);
        if (r.is_zero()) continue;
        auto t = static_cast<uint32_t>(G.size());
        G.push_back(std::move(r));
        for (uint32_t p = 0; p < t; ++p) push_pair(p, t);
    }
    return G;
}

// minimal, fully reduced, monic, sorted by increasing leading monomial
template <class K>
std::vector<Poly<K>> reduced_basis(std::vector<Poly<K>> G) {
    G.erase(std::remove_if(G.begin(), G.end(), [](auto& g) { return g.is_zero(); }), G.end());
    std::sort(G.begin(), G.end(), [](const Poly<K>& a, const Poly<K>& b) {
        return a.order().less(a.lead_monomial(), b.lead_monomial());
    });
    std::vector<Poly<K>> M;
    for (auto& g : G) {
        bool redundant = false;
        for (auto& h : M)
            if (divides(h.lead_monomial(), g.lead_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) M.push_back(g);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < M.size(); ++i) {
            std::vector<Poly<K>> rest;
            rest.reserve(M.size() - 1);
            for (size_t j = 0; j < M.size(); ++j)
                if (j != i) rest.push_back(M[j]);
            Poly<K> r = normal_form(M[i], rest);
            if (r != M[i]) {
                changed = true;
                M[i] = std::move(r);
            }
        }
        M.erase(std::remove_if(M.begin(), M.end(), [](auto& g) { return g.is_zero(); }), M.end());
    }
    for (auto& g : M) g = g.monic();
    std::sort(M.begin(), M.end(), [](const Poly<K>& a, const Poly<K>& b) {
        return a.order().less(a.lead_monomial(), b.lead_monomial());
    });
    return M;
}

template <class K>
std::vector<Poly<K>> groebner_basis(const std::vector<Poly<K>>& gens, const MonomialOrder& ord,
                                    const GroebnerOptions& opt = {}) {
    return reduced_basis(buchberger(gens, ord, opt));
}

// ideal membership against a basis that is already a Groebner basis
template <class K>
bool in_ideal(const Poly<K>& f, const std::vector<Poly<K>>& gb) {
    return normal_form(f, gb).is_zero();
}

// ---- integer lane ----
// Pseudo-reduction over Z avoids per-operation rational normalization; used
// where only leading monomials matter (staircase counts).  Scaling a
// polynomial by a nonzero constant never changes the leading-term ideal.

using ZPoly = Poly<Int>;

inline ZPoly z_content_stripped(const ZPoly& p) {
    if (p.is_zero()) return p;
    Int g = 0;
    for (auto& t : p.terms()) {
        g = boost::multiprecision::gcd(g, t.c);
        if (g == 1) break;
    }
    if (p.lead_coeff() < 0) g = -g;
    if (g == 1) return p;
    std::vector<Term<Int>> ts;
    for (auto& t : p.terms()) ts.push_back({t.m, t.c / g});
    return ZPoly::from_terms(p.order(), std::move(ts));
}

inline ZPoly to_integer_poly(const QPoly& p) {
    Int L = 1;
    for (auto& t : p.terms()) L = lcm(L, rat_den(t.c));
    std::vector<Term<Int>> ts;
    for (auto& t : p.terms()) ts.push_back({t.m, rat_num(t.c) * (L / rat_den(t.c))});
    return z_content_stripped(ZPoly::from_terms(p.order(), std::move(ts)));
}

inline QPoly to_monic_rational(const ZPoly& p) {
    std::vector<Term<Rational>> ts;
    for (auto& t : p.terms()) ts.push_back({t.m, Rational(t.c, p.lead_coeff())});
    return QPoly::from_terms(p.order(), std::move(ts));
}

// In-place pseudo-reduction: the whole polynomial is rescaled together, so
// content stripping stays sound.  Terms before the frontier are irreducible
// and subtractions never disturb them.
inline ZPoly z_normal_form(const ZPoly& f, const std::vector<ZPoly>& G, long T = -1) {
    ZPoly rem = T >= 0 ? truncated(f, T) : f;
    size_t frontier = 0;
    for (;;) {
        const ZPoly* red = nullptr;
        size_t k = frontier;
        for (; k < rem.term_count() && !red; ++k)
            for (auto& g : G)
                if (!g.is_zero() && divides(g.lead_monomial(), rem.terms()[k].m)) {
                    red = &g;
                    break;
                }
        if (!red) break;
        frontier = --k;
        ExpVec lm = rem.terms()[k].m;
        Int c = rem.terms()[k].c;
        Int l = lcm(c, red->lead_coeff());
        Int a = l / c;
        ZPoly sub = red->times_monomial(quotient(lm, red->lead_monomial()), l / red->lead_coeff());
        if (T >= 0) sub = truncated(sub, T);
        rem = rem.scaled(a) - sub;
        rem = z_content_stripped(rem);
    }
    return rem;
}

inline ZPoly z_s_polynomial(const ZPoly& f, const ZPoly& g) {
    ExpVec l = lcm(f.lead_monomial(), g.lead_monomial());
    Int lc = lcm(f.lead_coeff(), g.lead_coeff());
    ZPoly a = f.times_monomial(quotient(l, f.lead_monomial()), lc / f.lead_coeff());
    ZPoly b = g.times_monomial(quotient(l, g.lead_monomial()), lc / g.lead_coeff());
    return z_content_stripped(a - b);
}

struct ZStats {
    long pairs_popped = 0;
    long reductions = 0;
    size_t basis_size = 0;
};

// mirror of the rational buchberger over Z; same strategy and criteria
inline std::vector<ZPoly> z_buchberger(const std::vector<QPoly>& gens, const MonomialOrder& ord,
                                       const GroebnerOptions& opt = {}, ZStats* stats = nullptr) {
    long T = opt.truncate_degree;
    if (T >= 0 && ord.kind() != OrderKind::degrevlex)
        throw internal_error(errc::internal_assertion, "truncation needs a graded order");
    std::vector<ZPoly> G;
    for (auto& gq : gens) {
        if (gq.is_zero()) continue;
        QPoly h = gq.order() == ord ? gq : gq.reordered(ord);
        ZPoly z = to_integer_poly(h);
        if (T >= 0) z = truncated(z, T);
        if (opt.degree_cap >= 0) {
            if (!z.is_homogeneous() || ord.kind() != OrderKind::degrevlex)
                throw internal_error(errc::internal_assertion,
                                     "degree cap needs homogeneous input and a graded order");
            if (z.total_degree() >= opt.degree_cap) continue;
        }
        if (!z.is_zero()) G.push_back(std::move(z));
    }
    if (T >= 0)
        for (auto& m : monomials_of_degree(ord.vars(), static_cast<int>(T)))
            G.push_back(ZPoly::monomial(ord, m, Int(1)));

    using Entry = std::tuple<uint32_t, uint64_t, uint32_t, uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::unordered_set<uint64_t> done;
    uint64_t seq = 0;
    auto key = [](uint32_t i, uint32_t j) { return (static_cast<uint64_t>(i) << 32) | j; };
    auto push_pair = [&](uint32_t i, uint32_t j) {
        if (G[i].is_monomial() && G[j].is_monomial()) return;
        uint32_t d = lcm(G[i].lead_monomial(), G[j].lead_monomial()).deg;
        if (opt.degree_cap >= 0 && d >= static_cast<uint32_t>(opt.degree_cap)) return;
        queue.emplace(d, seq++, i, j);
    };
    for (uint32_t j = 1; j < G.size(); ++j)
        for (uint32_t i = 0; i < j; ++i) push_pair(i, j);

    long reductions = 0;
    while (!queue.empty()) {
        auto [deg, s, i, j] = queue.top();
        queue.pop();
        (void)deg;
        (void)s;
        if (stats) stats->pairs_popped++;
        done.insert(key(i, j));
        if (coprime(G[i].lead_monomial(), G[j].lead_monomial())) continue;
        if (opt.chain_criterion && !(T >= 0 && (G[i].is_monomial() || G[j].is_monomial()))) {
            ExpVec l = lcm(G[i].lead_monomial(), G[j].lead_monomial());
            bool skip = false;
            for (uint32_t k = 0; k < G.size() && !skip; ++k) {
                if (k == i || k == j || !divides(G[k].lead_monomial(), l)) continue;
                if (done.count(key(std::min(i, k), std::max(i, k))) &&
                    done.count(key(std::min(j, k), std::max(j, k))))
                    skip = true;
            }
            if (skip) continue;
        }
        if (++reductions > opt.step_budget)
            throw user_error(errc::step_budget_exceeded,
                             "basis computation exceeded the step budget of " +
                                 std::to_string(opt.step_budget));
        if (stats) stats->reductions = reductions;
        ZPoly r = z_normal_form(z_s_polynomial(G[i], G[j]), G, T);
        if (r.is_zero()) continue;
        auto t = static_cast<uint32_t>(G.size());
        G.push_back(std::move(r));
        for (uint32_t p = 0; p < t; ++p) push_pair(p, t);
    }
    if (stats) stats->basis_size = G.size();
    return G;
}

}  // namespace limideal
