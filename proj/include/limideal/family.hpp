#pragma once

// Parametric families of points and ideals and their flat limits as the
// parameter goes to 0.  The limit is computed by saturating with respect to
// the parameter in the ring with the parameter adjoined and then setting it
// to 0; the colength of the result must equal the generic-fiber colength,
// which is asserted.  Pure dilation families (every coordinate a constant
// times the parameter) admit a much faster equivalent route through top
// forms, used for towers and cross-checked against the general route in the
// test suite.

#include <optional>
#include <vector>

#include "limideal/ideal.hpp"

namespace limideal {

// N marked points, each coordinate a polynomial in the parameter
struct PointFamily {
    int nvars = 0;
    std::vector<std::vector<EpsPoly>> points;
};

// zero-dimensional ideal family with generators over Q[parameter][z]
struct IdealFamily {
    int nvars = 0;
    std::vector<EPoly> generators;
};

inline void validate_point_family(const PointFamily& pf) {
    if (pf.nvars < 1 || pf.nvars > 6)
        throw user_error(errc::config_error, "family dimension must be between 1 and 6");
    if (pf.points.empty()) throw user_error(errc::config_error, "family needs at least one point");
    for (auto& row : pf.points)
        if (static_cast<int>(row.size()) != pf.nvars)
            throw user_error(errc::config_error, "point coordinate count does not match dimension");
    for (size_t i = 0; i < pf.points.size(); ++i)
        for (size_t j = i + 1; j < pf.points.size(); ++j)
            if (pf.points[i] == pf.points[j])
                throw user_error(errc::duplicate_points,
                                 "points " + std::to_string(i) + " and " + std::to_string(j) +
                                     " coincide as functions of the parameter");
}

// the family after moving the limit position of the first point to the
// origin; collides records whether every point then tends to the origin
struct NormalizedFamily {
    PointFamily family;
    std::vector<Rational> base;  // subtracted translation
    bool collides = false;
};

inline NormalizedFamily normalize_points(const PointFamily& pf) {
    validate_point_family(pf);
    NormalizedFamily out;
    out.family.nvars = pf.nvars;
    out.base.reserve(pf.nvars);
    for (int i = 0; i < pf.nvars; ++i) out.base.push_back(pf.points[0][i].at_zero());
    out.collides = true;
    for (auto& row : pf.points) {
        std::vector<EpsPoly> shifted;
        shifted.reserve(pf.nvars);
        for (int i = 0; i < pf.nvars; ++i) {
            EpsPoly c = row[i] - EpsPoly(out.base[i]);
            if (c.at_zero() != 0) out.collides = false;
            shifted.push_back(std::move(c));
        }
        out.family.points.push_back(std::move(shifted));
    }
    return out;
}

// when every coordinate is c * parameter, returns the matrix of constants
inline std::optional<std::vector<std::vector<Rational>>> dilation_directions(
    const PointFamily& pf) {
    std::vector<std::vector<Rational>> dirs;
    for (auto& row : pf.points) {
        std::vector<Rational> s;
        for (auto& c : row) {
            if (c.at_zero() != 0 || c.degree() > 1) return std::nullopt;
            s.push_back(c.degree() == 1 ? c.coeffs()[1] : Rational(0));
        }
        dirs.push_back(std::move(s));
    }
    return dirs;
}

// intersection of the maximal ideals at the points over Q(parameter), with
// denominators cleared and parameter content stripped from each generator
inline IdealFamily family_from_points(const PointFamily& pf, const GroebnerOptions& opt = {}) {
    validate_point_family(pf);
    std::vector<std::vector<EpsRationalFn>> coords;
    for (auto& row : pf.points) {
        std::vector<EpsRationalFn> c;
        for (auto& x : row) c.emplace_back(x);
        coords.push_back(std::move(c));
    }
    FIdeal radical = intersect_point_ideals(coords, opt).canonicalized();
    IdealFamily out;
    out.nvars = pf.nvars;
    for (auto& g : radical.gens()) {
        EPoly cleared = primitive_part(clear_denominators(g, g.order()));
        if (!cleared.is_zero()) out.generators.push_back(std::move(cleared));
    }
    return out;
}

inline void validate_ideal_family(const IdealFamily& fam) {
    if (fam.nvars < 1 || fam.nvars > 6)
        throw user_error(errc::config_error, "family dimension must be between 1 and 6");
    if (fam.generators.empty())
        throw user_error(errc::config_error, "ideal family needs at least one generator");
    for (auto& g : fam.generators) {
        if (g.is_zero())
            throw user_error(errc::config_error, "ideal family generator is identically zero");
        if (g.vars() != fam.nvars)
            throw user_error(errc::config_error, "generator variable count does not match dimension");
    }
}

// the family viewed over Q(parameter); its colength is the generic-fiber
// length, i.e. the common length at all small nonzero parameter values
inline FIdeal generic_fiber(const IdealFamily& fam, const GroebnerOptions& opt = {}) {
    validate_ideal_family(fam);
    std::vector<FPoly> gens;
    for (auto& g : fam.generators) gens.push_back(to_rational_fn(g));
    return FIdeal(fam.nvars, std::move(gens), opt);
}

inline long generic_fiber_colength(const IdealFamily& fam, const GroebnerOptions& opt = {}) {
    try {
        return generic_fiber(fam, opt).colength();
    } catch (const user_error& e) {
        if (e.code == errc::not_zero_dimensional)
            throw user_error(errc::not_zero_dimensional_fiber,
                             "the family is not zero-dimensional over the parameter field");
        throw;
    }
}

// flat limit at parameter 0: adjoin the parameter as a last ring variable,
// saturate by it, and set it to 0 in the saturation's generators (the image
// of an ideal under a surjection is generated by the generator images).
// The colength assertion against the generic fiber is the whole point: the
// flat limit is the unique parameter-0 fiber with the generic length.
inline QIdeal flat_limit(const IdealFamily& fam, const GroebnerOptions& opt = {}) {
    long fiber_length = generic_fiber_colength(fam, opt);
    int nv = fam.nvars;
    MonomialOrder big = MonomialOrder::degrevlex(nv + 1);
    MonomialOrder small = MonomialOrder::degrevlex(nv);
    std::vector<QPoly> wide;
    for (auto& g : fam.generators) wide.push_back(adjoin_parameter_back(g, big));
    QIdeal with_param(nv + 1, std::move(wide), opt);
    QPoly param = QPoly::variable(big, nv);
    QIdeal saturated = saturate(with_param, param);
    std::vector<QPoly> specialized;
    for (auto& g : saturated.gens()) {
        QPoly s = substitute_zero_back(g, small);
        if (!s.is_zero()) specialized.push_back(std::move(s));
    }
    QIdeal limit(nv, std::move(specialized), opt);
    limit = limit.canonicalized();
    if (limit.colength() != fiber_length)
        throw internal_error(errc::internal_length_mismatch,
                             "flat limit length " + std::to_string(limit.colength()) +
                                 " differs from generic fiber length " +
                                 std::to_string(fiber_length));
    return limit;
}

// the p-th power family over Q(parameter), cleared back to polynomial
// coefficients; generators are the reduced basis of the power
inline IdealFamily family_power(const IdealFamily& fam, int p, const GroebnerOptions& opt = {}) {
    if (p < 1) throw user_error(errc::config_error, "power must be positive");
    FIdeal fiber = generic_fiber(fam, opt);
    FIdeal power = fiber.power(p).canonicalized();
    IdealFamily out;
    out.nvars = fam.nvars;
    for (auto& g : power.gens()) {
        EPoly cleared = primitive_part(clear_denominators(g, g.order()));
        if (!cleared.is_zero()) out.generators.push_back(std::move(cleared));
    }
    return out;
}

// limits of the powers I_eps^p for p = 1..p_max with the generic lengths
struct LimitTower {
    int nvars = 0;
    int p_max = 0;
    std::vector<QIdeal> limits;         // limits[p-1] is the limit of the p-th powers
    std::vector<long> generic_lengths;  // lengths of the generic fibers of the powers
    bool pure_dilation = false;
};

// everything the pipeline needs to know about where a family came from
struct FamilyContext {
    IdealFamily ideal_family;
    // set when the family is the point family of (parameter * directions)
    std::optional<std::vector<std::vector<Rational>>> dilation;
    std::vector<Rational> base_translation;
    bool from_points = false;
    bool collides_at_origin = true;
    int point_count = 0;
};

inline FamilyContext prepare_family(const PointFamily& pf, const GroebnerOptions& opt = {}) {
    NormalizedFamily norm = normalize_points(pf);
    FamilyContext ctx;
    ctx.ideal_family = family_from_points(norm.family, opt);
    ctx.dilation = dilation_directions(norm.family);
    ctx.base_translation = std::move(norm.base);
    ctx.from_points = true;
    ctx.collides_at_origin = norm.collides;
    ctx.point_count = static_cast<int>(pf.points.size());
    return ctx;
}

inline FamilyContext prepare_family(const IdealFamily& fam) {
    validate_ideal_family(fam);
    FamilyContext ctx;
    ctx.ideal_family = fam;
    return ctx;
}

// For a pure dilation family the p-th limit is the ideal of top forms of
// I_S^p, where I_S is the radical ideal of the direction points: rescaling
// z = eps * w identifies the eps-fiber of the power with I_S^p up to the
// grading twist, and the parameter-0 degeneration keeps exactly the top
// forms.  The length assertion below re-checks this route at runtime.
inline QIdeal dilation_power_limit(const QIdeal& directions_power) {
    return directions_power.top_form_ideal().canonicalized();
}

inline LimitTower limit_tower(const FamilyContext& ctx, int p_max,
                              const GroebnerOptions& opt = {}) {
    if (p_max < 1) throw user_error(errc::config_error, "p_max must be at least 1");
    LimitTower tower;
    tower.nvars = ctx.ideal_family.nvars;
    tower.p_max = p_max;
    tower.pure_dilation = ctx.dilation.has_value();
    if (tower.pure_dilation) {
        QIdeal IS = intersect_point_ideals(*ctx.dilation, opt).canonicalized();
        QIdeal power = IS;
        for (int p = 1; p <= p_max; ++p) {
            if (p > 1) power = (power * IS).canonicalized();
            long fiber_length = power.colength();
            QIdeal lim = dilation_power_limit(power);
            if (lim.colength() != fiber_length)
                throw internal_error(errc::internal_length_mismatch,
                                     "top-form limit length differs from the fiber length at p=" +
                                         std::to_string(p));
            tower.limits.push_back(std::move(lim));
            tower.generic_lengths.push_back(fiber_length);
        }
    } else {
        FIdeal fiber = generic_fiber(ctx.ideal_family, opt);
        FIdeal power = fiber;
        for (int p = 1; p <= p_max; ++p) {
            if (p > 1) power = (power * fiber).canonicalized();
            IdealFamily fam_p;
            fam_p.nvars = ctx.ideal_family.nvars;
            for (auto& g : power.gens()) {
                EPoly cleared = primitive_part(clear_denominators(g, g.order()));
                if (!cleared.is_zero()) fam_p.generators.push_back(std::move(cleared));
            }
            tower.limits.push_back(flat_limit(fam_p, opt));
            tower.generic_lengths.push_back(tower.limits.back().colength());
        }
    }
    return tower;
}

// graded inclusion I_(p) * I_(q) inside I_(p+q) and power compatibility
// I_(1)^p inside I_(p); violations signal an implementation bug
inline void check_tower_invariants(const LimitTower& tower) {
    for (int p = 1; p <= tower.p_max; ++p)
        for (int q = p; p + q <= tower.p_max; ++q) {
            const QIdeal& target = tower.limits[p + q - 1];
            for (auto& f : tower.limits[p - 1].gens())
                for (auto& g : tower.limits[q - 1].gens())
                    if (!target.contains(f * g))
                        throw internal_error(errc::graded_inclusion_violation,
                                             "product of limit generators escapes the limit at p+q=" +
                                                 std::to_string(p + q));
        }
    QIdeal power = tower.limits.empty() ? QIdeal() : tower.limits[0];
    for (int p = 2; p <= tower.p_max; ++p) {
        power = (power * tower.limits[0]).canonicalized();
        for (auto& f : power.gens())
            if (!tower.limits[p - 1].contains(f))
                throw internal_error(errc::graded_inclusion_violation,
                                     "power of the first limit escapes the limit at p=" +
                                         std::to_string(p));
    }
}

// the single limit I_(p) without building the whole tower
inline QIdeal power_limit(const FamilyContext& ctx, int p, const GroebnerOptions& opt = {}) {
    if (p < 1) throw user_error(errc::config_error, "power must be positive");
    if (ctx.dilation) {
        QIdeal IS = intersect_point_ideals(*ctx.dilation, opt).canonicalized();
        QIdeal power = IS;
        for (int k = 2; k <= p; ++k) power = (power * IS).canonicalized();
        long fiber_length = power.colength();
        QIdeal lim = dilation_power_limit(power);
        if (lim.colength() != fiber_length)
            throw internal_error(errc::internal_length_mismatch,
                                 "top-form limit length differs from the fiber length");
        return lim;
    }
    if (p == 1) return flat_limit(ctx.ideal_family, opt);
    return flat_limit(family_power(ctx.ideal_family, p, opt), opt);
}

inline bool membership_in_limit(const QPoly& f, const FamilyContext& ctx, int p,
                                const GroebnerOptions& opt = {}) {
    return power_limit(ctx, p, opt).contains(f);
}

}  // namespace limideal
