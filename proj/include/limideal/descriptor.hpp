#pragma once

#include <string>
#include <vector>

#include "limideal/multiplicity.hpp"
#include "limideal/newton.hpp"

namespace limideal {

// finite presentation of a limiting singularity type: the generators of a
// limit ideal at scale p together with its residual mass p^-n e(I)
struct SingularityDescriptor {
    int nvars = 0;
    int scale = 1;
    std::vector<QPoly> generators;  // reduced basis, canonical order
    Rational mass;
    bool monomial = false;
};

namespace desc_detail {

// every coordinate power z_i^D must lie in I; D combines the staircase corner
// bound with the colength so the test is complete whenever the only zero is
// the origin, over any field extension
inline void require_origin_support(const QIdeal& I) {
    if (!I.is_zero_dimensional())
        throw user_error(errc::not_zero_dimensional, "descriptor needs a zero-dimensional ideal");
    bool homog = true;
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) { homog = false; break; }
    if (homog) return;
    long d = 0;
    for (int i = 0; i < I.vars(); ++i) d += I.pure_power_degree(i);
    long D = std::max(d, I.colength());
    for (int i = 0; i < I.vars(); ++i) {
        QPoly zi = QPoly::monomial(I.default_order(), ExpVec::unit(I.vars(), i, static_cast<int>(D)),
                                   Rational(1));
        if (!I.contains(zi))
            throw user_error(errc::not_origin_supported,
                             "ideal vanishes away from the origin");
    }
}

inline std::string bare_monomial(const ExpVec& m, int nvars) {
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        if (!m[i]) continue;
        out += "z" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string weight_text(const Rational& w) {
    return to_string(w);
}

}  // namespace desc_detail

inline SingularityDescriptor descriptor(const QIdeal& I, int p, const MultiplicityReport& rep) {
    if (p < 1) throw user_error(errc::config_error, "scale must be positive");
    desc_detail::require_origin_support(I);
    SingularityDescriptor d;
    d.nvars = I.vars();
    d.scale = p;
    d.generators = I.groebner();
    d.monomial = I.is_monomial();
    long pn = 1;
    for (int i = 0; i < I.vars(); ++i) pn *= p;
    d.mass = Rational(rep.multiplicity) / Rational(pn);
    return d;
}

inline SingularityDescriptor descriptor(const QIdeal& I, int p,
                                        const MultiplicityPolicy& pol = {}) {
    return descriptor(I, p, hs_multiplicity(I, pol));
}

// Canonical text form.  Monomial descriptors keep only the vertices of the
// Newton polyhedron; when every vertex is a pure power the scale distributes
// into per-variable weights, matching the usual way these asymptotics are
// written.
inline std::string render(const SingularityDescriptor& d) {
    std::string scale_prefix =
        d.scale == 1 ? "log max(" : "1/" + std::to_string(d.scale) + " log max(";
    if (d.monomial && d.nvars <= 4) {
        NewtonStaircase ns;
        ns.nvars = d.nvars;
        for (auto& g : d.generators) ns.minimal_exponents.push_back(g.lead_monomial());
        std::sort(ns.minimal_exponents.begin(), ns.minimal_exponents.end(),
                  [&](const ExpVec& a, const ExpVec& b) {
                      for (int i = 0; i < ns.nvars; ++i)
                          if (a[i] != b[i]) return a[i] > b[i];
                      return false;
                  });
        std::vector<ExpVec> verts = np_vertices(ns);
        bool all_pure = true;
        bool weighted = false;
        for (auto& v : verts) {
            int support = 0;
            for (int i = 0; i < d.nvars; ++i)
                if (v[i]) ++support;
            if (support != 1) all_pure = false;
            if (static_cast<int>(v.deg) != d.scale) weighted = true;
        }
        if (all_pure && weighted && !verts.empty()) {
            // one weighted log per variable, in variable order
            std::string out = "max(";
            bool first = true;
            for (int i = 0; i < d.nvars; ++i) {
                for (auto& v : verts) {
                    if (!v[i]) continue;
                    if (!first) out += ", ";
                    first = false;
                    Rational w = Rational(v[i], d.scale);
                    if (w != 1) out += desc_detail::weight_text(w) + " ";
                    out += "log|z" + std::to_string(i + 1) + "|";
                }
            }
            return out + ") + O(1)";
        }
        std::string out = scale_prefix;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            if (k) out += ", ";
            out += "|" + desc_detail::bare_monomial(verts[k], d.nvars) + "|";
        }
        return out + ") + O(1)";
    }
    std::string out = scale_prefix;
    for (std::size_t k = 0; k < d.generators.size(); ++k) {
        if (k) out += ", ";
        out += "|" + d.generators[k].str() + "|";
    }
    return out + ") + O(1)";
}

// equivalence up to bounded terms for monomial descriptors: the scaled Newton
// polyhedra must coincide
inline bool descriptors_equivalent_monomial(const SingularityDescriptor& a,
                                            const SingularityDescriptor& b) {
    if (!a.monomial || !b.monomial)
        throw user_error(errc::not_monomial, "only monomial descriptors are compared");
    auto stair = [](const SingularityDescriptor& d) {
        NewtonStaircase ns;
        ns.nvars = d.nvars;
        for (auto& g : d.generators) ns.minimal_exponents.push_back(g.lead_monomial());
        return ns;
    };
    return newton_equivalent(stair(a), a.scale, stair(b), b.scale);
}

}  // namespace limideal
