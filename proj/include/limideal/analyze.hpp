#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "limideal/descriptor.hpp"
#include "limideal/multiplicity.hpp"
#include "limideal/parse.hpp"

namespace limideal {

using ordered_json = nlohmann::ordered_json;

struct AnalysisConfig {
    int variables = 0;
    std::vector<std::vector<std::string>> points;  // coordinate expressions in e
    std::vector<std::string> generators;           // generator expressions
    int p_max = 3;
    int k_budget = -1;
    int trials = 8;
    std::uint64_t seed = 20240817ull;
    std::string label;
};

inline AnalysisConfig config_from_json(const ordered_json& j) {
    AnalysisConfig cfg;
    try {
        if (!j.is_object()) throw user_error(errc::config_error, "config must be a JSON object");
        if (!j.contains("variables") || !j["variables"].is_number_integer())
            throw user_error(errc::config_error, "config needs an integer 'variables'");
        cfg.variables = j["variables"].get<int>();
        if (j.contains("points")) {
            for (auto& row : j["points"]) {
                std::vector<std::string> coords;
                for (auto& c : row) coords.push_back(c.get<std::string>());
                cfg.points.push_back(std::move(coords));
            }
        }
        if (j.contains("generators"))
            for (auto& g : j["generators"]) cfg.generators.push_back(g.get<std::string>());
        if (j.contains("p_max")) cfg.p_max = j["p_max"].get<int>();
        if (j.contains("k_budget")) cfg.k_budget = j["k_budget"].get<int>();
        if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("label")) cfg.label = j["label"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw user_error(errc::config_error, std::string("malformed config: ") + e.what());
    }
    if (cfg.variables < 1 || cfg.variables > 6)
        throw user_error(errc::config_error, "variables must be between 1 and 6");
    if (cfg.p_max < 1) throw user_error(errc::config_error, "p_max must be at least 1");
    if (cfg.trials < 1) throw user_error(errc::config_error, "trials must be at least 1");
    if (cfg.points.empty() == cfg.generators.empty())
        throw user_error(errc::config_error,
                         "config needs exactly one of 'points' or 'generators'");
    return cfg;
}

inline AnalysisConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw user_error(errc::config_error, "cannot open config file '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw user_error(errc::config_error, std::string("config is not valid JSON: ") + e.what());
    }
    AnalysisConfig cfg = config_from_json(j);
    if (cfg.label.empty()) cfg.label = path;
    return cfg;
}

// a coordinate must be constant in the ring variables
inline EpsPoly parse_eps_scalar(const std::string& text, int nvars) {
    EPoly p = parse_poly(text, nvars);
    EpsPoly out;
    for (auto& t : p.terms()) {
        if (t.m.deg != 0)
            throw user_error(errc::parse_error,
                             "point coordinate '" + text + "' must not involve ring variables");
        out = t.c;
    }
    return out;
}

inline FamilyContext family_from_config(const AnalysisConfig& cfg,
                                        const GroebnerOptions& gopt = {}) {
    if (!cfg.points.empty()) {
        PointFamily pf;
        pf.nvars = cfg.variables;
        for (auto& row : cfg.points) {
            if (static_cast<int>(row.size()) != cfg.variables)
                throw user_error(errc::config_error, "point row size must equal 'variables'");
            std::vector<EpsPoly> coords;
            for (auto& c : row) coords.push_back(parse_eps_scalar(c, cfg.variables));
            pf.points.push_back(std::move(coords));
        }
        return prepare_family(pf, gopt);
    }
    IdealFamily fam;
    fam.nvars = cfg.variables;
    for (auto& g : cfg.generators) fam.generators.push_back(parse_poly(g, cfg.variables));
    return prepare_family(fam);
}

struct AnalysisResult {
    ordered_json report;
    FamilyContext ctx;
    LimitTower tower;
    std::vector<MultiplicityReport> multiplicities;
};

namespace analyze_detail {

inline ordered_json warning_entry(const std::string& code, const std::string& detail) {
    ordered_json w;
    w["code"] = code;
    w["detail"] = detail;
    return w;
}

}  // namespace analyze_detail

inline AnalysisResult run_analyze(const AnalysisConfig& cfg) {
    AnalysisResult res;
    std::vector<ordered_json> warnings;
    res.ctx = family_from_config(cfg);
    res.tower = limit_tower(res.ctx, cfg.p_max);
    check_tower_invariants(res.tower);

    bool single_collision = res.ctx.from_points && res.ctx.collides_at_origin &&
                            supported_only_at_origin(res.tower.limits.front());
    if (res.ctx.from_points && !res.ctx.collides_at_origin)
        warnings.push_back(analyze_detail::warning_entry(
            "non-colliding-family",
            "points do not merge at the parameter limit; stabilization theory does not apply"));

    MultiplicityPolicy pol;
    pol.k_budget = cfg.k_budget;
    pol.trials = cfg.trials;
    pol.seed = cfg.seed;
    long N = res.ctx.point_count;
    res.multiplicities = tower_multiplicities(res.tower, single_collision ? N : -1, pol);
    VolumeBounds vb = graded_volume(res.tower, res.multiplicities);

    std::optional<int> stab;
    if (single_collision) {
        stab = stabilization_index(res.tower, N, res.multiplicities);
        if (!stab)
            warnings.push_back(analyze_detail::warning_entry(
                "no-stabilization",
                "no p up to p_max reaches multiplicity p^n * N; only bounds are reported"));
    } else {
        warnings.push_back(analyze_detail::warning_entry(
            "verdict-suppressed", res.ctx.from_points
                                      ? "family does not collide at a single point"
                                      : "generator families carry no point count"));
    }

    // descriptor scale: the stabilizing p, or the first p attaining the
    // current volume upper bound
    int desc_p = 0;
    if (stab) {
        desc_p = *stab;
    } else {
        for (int p = 1; p <= res.tower.p_max; ++p) {
            if (std::get<2>(vb.per_p[p - 1]) == vb.upper_bound) {
                desc_p = p;
                break;
            }
        }
    }
    std::optional<SingularityDescriptor> desc;
    std::string desc_err;
    try {
        desc = descriptor(res.tower.limits[desc_p - 1], desc_p, res.multiplicities[desc_p - 1]);
    } catch (const user_error& e) {
        desc_err = e.what();
        warnings.push_back(analyze_detail::warning_entry("descriptor-suppressed", e.what()));
    }

    ordered_json rep;
    ordered_json jc;
    jc["label"] = cfg.label;
    jc["variables"] = cfg.variables;
    jc["p_max"] = cfg.p_max;
    jc["k_budget"] = cfg.k_budget;
    jc["trials"] = cfg.trials;
    jc["seed"] = cfg.seed;
    jc["source"] = cfg.points.empty() ? "generators" : "points";
    if (!cfg.points.empty()) jc["point_count"] = res.ctx.point_count;
    rep["config"] = jc;

    ordered_json jf;
    jf["collides_at_origin"] = res.ctx.collides_at_origin;
    jf["pure_dilation"] = res.tower.pure_dilation;
    {
        ordered_json tr = ordered_json::array();
        for (auto& c : res.ctx.base_translation) tr.push_back(to_string(c));
        jf["base_translation"] = tr;
        ordered_json gens = ordered_json::array();
        for (auto& g : res.ctx.ideal_family.generators) gens.push_back(g.str());
        jf["generators"] = gens;
    }
    rep["family"] = jf;

    ordered_json jt = ordered_json::array();
    for (int p = 1; p <= res.tower.p_max; ++p) {
        ordered_json row;
        row["p"] = p;
        ordered_json gens = ordered_json::array();
        for (auto& g : res.tower.limits[p - 1].groebner()) gens.push_back(g.str());
        row["generators"] = gens;
        row["length"] = res.tower.generic_lengths[p - 1];
        row["multiplicity"] = res.multiplicities[p - 1].multiplicity;
        row["scaled_multiplicity"] = to_string(std::get<2>(vb.per_p[p - 1]));
        row["method"] = res.multiplicities[p - 1].method;
        row["certified"] = res.multiplicities[p - 1].certified;
        row["complete_intersection"] = res.multiplicities[p - 1].complete_intersection;
        jt.push_back(row);
    }
    rep["tower"] = jt;

    ordered_json jv;
    jv["upper_bound"] = to_string(vb.upper_bound);
    ordered_json est = ordered_json::array();
    for (auto& [p, v] : vb.length_estimator) {
        ordered_json e;
        e["p"] = p;
        e["value"] = to_string(v);
        est.push_back(e);
    }
    jv["length_estimator"] = est;
    rep["volume"] = jv;

    ordered_json jverdict;
    if (stab && *stab == 1) {
        jverdict["type"] = "CompleteIntersection";
        jverdict["p"] = 1;
        jverdict["multiplicity"] = res.multiplicities[0].multiplicity;
    } else if (stab) {
        jverdict["type"] = "StabilizedAt";
        jverdict["p"] = *stab;
        jverdict["multiplicity"] = res.multiplicities[*stab - 1].multiplicity;
        long expect = N;
        for (int i = 0; i < cfg.variables; ++i) expect *= *stab;
        jverdict["expected_mass_numerator"] = expect;
    } else {
        jverdict["type"] = "BoundsOnly";
        jverdict["upper_bound"] = to_string(vb.upper_bound);
    }
    rep["verdict"] = jverdict;

    if (desc) {
        ordered_json jd;
        jd["scale"] = desc->scale;
        jd["mass"] = to_string(desc->mass);
        jd["monomial"] = desc->monomial;
        ordered_json gens = ordered_json::array();
        for (auto& g : desc->generators) gens.push_back(g.str());
        jd["generators"] = gens;
        jd["rendered"] = render(*desc);
        rep["descriptor"] = jd;
    } else {
        rep["descriptor"] = nullptr;
    }

    ordered_json jw = ordered_json::array();
    for (auto& w : warnings) jw.push_back(w);
    rep["warnings"] = jw;

    res.report = std::move(rep);
    return res;
}

// text form assembled from the machine report, so both carry the same numbers
inline std::string render_text_report(const ordered_json& rep) {
    std::ostringstream os;
    const auto& jc = rep["config"];
    os << "analysis: " << jc["label"].get<std::string>() << "\n";
    os << "ring variables: " << jc["variables"].get<int>() << ", source: "
       << jc["source"].get<std::string>();
    if (jc.contains("point_count")) os << ", points: " << jc["point_count"].get<int>();
    os << ", p_max: " << jc["p_max"].get<int>() << ", seed: " << jc["seed"].get<std::uint64_t>()
       << "\n";
    const auto& jf = rep["family"];
    os << "family: collides_at_origin=" << (jf["collides_at_origin"].get<bool>() ? "yes" : "no")
       << ", pure_dilation=" << (jf["pure_dilation"].get<bool>() ? "yes" : "no") << "\n";
    os << "family generators:\n";
    for (auto& g : jf["generators"]) os << "  " << g.get<std::string>() << "\n";
    os << "tower:\n";
    for (auto& row : rep["tower"]) {
        os << "  p=" << row["p"].get<int>() << ": length " << row["length"].get<long>()
           << ", multiplicity " << row["multiplicity"].get<long>() << " (scaled "
           << row["scaled_multiplicity"].get<std::string>() << ", "
           << row["method"].get<std::string>()
           << (row["certified"].get<bool>() ? ", certified" : "") << ")\n";
        for (auto& g : row["generators"]) os << "      " << g.get<std::string>() << "\n";
    }
    os << "volume upper bound: " << rep["volume"]["upper_bound"].get<std::string>() << "\n";
    os << "length estimator:";
    for (auto& e : rep["volume"]["length_estimator"])
        os << " p=" << e["p"].get<int>() << ":" << e["value"].get<std::string>();
    os << "\n";
    const auto& jv = rep["verdict"];
    os << "verdict: " << jv["type"].get<std::string>();
    if (jv.contains("p")) os << " (p=" << jv["p"].get<int>() << ")";
    if (jv.contains("multiplicity")) os << ", multiplicity " << jv["multiplicity"].get<long>();
    if (jv.contains("upper_bound")) os << ", upper bound " << jv["upper_bound"].get<std::string>();
    os << "\n";
    if (!rep["descriptor"].is_null()) {
        const auto& jd = rep["descriptor"];
        os << "descriptor (scale " << jd["scale"].get<int>() << ", mass "
           << jd["mass"].get<std::string>() << "):\n";
        os << "  " << jd["rendered"].get<std::string>() << "\n";
    }
    for (auto& w : rep["warnings"])
        os << "warning [" << w["code"].get<std::string>() << "]: "
           << w["detail"].get<std::string>() << "\n";
    return os.str();
}

// e-sequence scan: the smallest p whose multiplicity reaches p^n N, with the
// divisor observation against lcm(1..n)
inline ordered_json run_search(const AnalysisConfig& cfg) {
    AnalysisResult res = run_analyze(cfg);
    if (!(res.ctx.from_points && res.ctx.collides_at_origin &&
          supported_only_at_origin(res.tower.limits.front())))
        throw user_error(errc::not_single_point,
                         "stabilization search needs a family colliding at a single point");
    long N = res.ctx.point_count;
    int n = cfg.variables;
    ordered_json out;
    out["label"] = cfg.label;
    out["variables"] = n;
    out["point_count"] = N;
    out["p_max"] = cfg.p_max;
    ordered_json seq = ordered_json::array();
    std::optional<int> first;
    for (int p = 1; p <= cfg.p_max; ++p) {
        long pn = 1;
        for (int i = 0; i < n; ++i) pn *= p;
        ordered_json row;
        row["p"] = p;
        row["multiplicity"] = res.multiplicities[p - 1].multiplicity;
        row["target"] = pn * N;
        row["stabilized"] = res.multiplicities[p - 1].multiplicity == pn * N;
        seq.push_back(row);
        if (!first && res.multiplicities[p - 1].multiplicity == pn * N) first = p;
    }
    out["e_sequence"] = seq;
    long l = 1;
    for (long k = 2; k <= n; ++k) l = l / std::gcd(l, k) * k;
    out["lcm_1_to_n"] = l;
    if (first) {
        out["first_stabilizing_p"] = *first;
        out["divides_lcm"] = l % *first == 0;
    } else {
        out["first_stabilizing_p"] = nullptr;
    }
    return out;
}

inline std::string render_search_text(const ordered_json& s) {
    std::ostringstream os;
    os << "stabilization search: " << s["label"].get<std::string>() << " (n="
       << s["variables"].get<int>() << ", N=" << s["point_count"].get<long>() << ", p_max="
       << s["p_max"].get<int>() << ")\n";
    for (auto& row : s["e_sequence"])
        os << "  p=" << row["p"].get<int>() << ": e=" << row["multiplicity"].get<long>()
           << " target=" << row["target"].get<long>()
           << (row["stabilized"].get<bool>() ? "  <- stabilized" : "") << "\n";
    if (s["first_stabilizing_p"].is_null()) {
        os << "no stabilizing p within p_max\n";
    } else {
        os << "first stabilizing p: " << s["first_stabilizing_p"].get<int>() << " (divides lcm(1.."
           << s["variables"].get<int>() << ") = " << s["lcm_1_to_n"].get<long>() << ": "
           << (s["divides_lcm"].get<bool>() ? "yes" : "no") << ")\n";
    }
    return os.str();
}

}  // namespace limideal
