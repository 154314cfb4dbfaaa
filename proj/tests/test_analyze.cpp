#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "limideal/analyze.hpp"
#include "limideal/presets.hpp"

using namespace limideal;

TEST_CASE("two point preset is a complete intersection report") {
    AnalysisResult r = run_analyze(preset_config("two-point"));
    CHECK(r.report["verdict"]["type"] == "CompleteIntersection");
    CHECK(r.report["verdict"]["p"] == 1);
    CHECK(r.tower.limits[0].contains(parse_qpoly("z2", 2)));
    CHECK(r.tower.limits[0].contains(parse_qpoly("z1^2", 2)));
    CHECK(r.report["tower"][0]["length"] == 2);
    CHECK(r.report["tower"][0]["multiplicity"] == 2);
    CHECK(r.report["warnings"].empty());
    std::string txt = render_text_report(r.report);
    CHECK(txt.find("CompleteIntersection") != std::string::npos);
}

TEST_CASE("generic three point preset stabilizes at two") {
    AnalysisConfig cfg = preset_config("generic-3pt");
    AnalysisResult r = run_analyze(cfg);
    CHECK(r.report["verdict"]["type"] == "StabilizedAt");
    CHECK(r.report["verdict"]["p"] == 2);
    CHECK(r.report["verdict"]["multiplicity"] == 12);
    CHECK(r.report["descriptor"]["mass"] == "3");
    CHECK(r.report["descriptor"]["monomial"] == false);
    std::string rend = r.report["descriptor"]["rendered"].get<std::string>();
    CHECK(rend.rfind("1/2 log max(", 0) == 0);
    CHECK(rend.find("z1^2*z2 + z1*z2^2") != std::string::npos);
    CHECK(r.report["volume"]["upper_bound"] == "3");
}

TEST_CASE("reports are bit identical run to run") {
    AnalysisConfig cfg = preset_config("generic-3pt");
    AnalysisResult a = run_analyze(cfg);
    AnalysisResult b = run_analyze(cfg);
    CHECK(a.report.dump() == b.report.dump());
    // the mathematical content does not depend on the seed
    cfg.seed = 999;
    AnalysisResult c = run_analyze(cfg);
    CHECK(c.report["verdict"].dump() == a.report["verdict"].dump());
    CHECK(c.report["tower"][1]["multiplicity"] == a.report["tower"][1]["multiplicity"]);
}

TEST_CASE("the text report carries the same numbers as the machine report") {
    AnalysisResult r = run_analyze(preset_config("generic-3pt"));
    std::string txt = render_text_report(r.report);
    CHECK(txt.find("length 3") != std::string::npos);
    CHECK(txt.find("length 9") != std::string::npos);
    CHECK(txt.find("multiplicity 12") != std::string::npos);
    CHECK(txt.find("volume upper bound: 3") != std::string::npos);
    CHECK(txt.find(r.report["descriptor"]["rendered"].get<std::string>()) != std::string::npos);
}

TEST_CASE("degenerate three point preset keeps its monomial descriptor") {
    AnalysisResult r = run_analyze(preset_config("degenerate-3pt"));
    CHECK(r.report["verdict"]["type"] == "StabilizedAt");
    CHECK(r.report["verdict"]["p"] == 2);
    CHECK(r.tower.limits[1].contains(parse_qpoly("z1^2*z2", 2)));
    CHECK(r.report["tower"][1]["multiplicity"] == 12);
    CHECK(r.report["descriptor"]["rendered"] ==
          "1/2 log max(|z1^4|, |z1^2z2|, |z2^4|) + O(1)");
}

TEST_CASE("tangential collision preset renders weighted logs") {
    AnalysisResult r = run_analyze(preset_config("dqht-3pt"));
    CHECK(r.tower.limits[1].contains(parse_qpoly("z2^3", 2)));
    CHECK(r.report["descriptor"]["rendered"] == "max(2 log|z1|, 3/2 log|z2|) + O(1)");
    CHECK(r.report["descriptor"]["mass"] == "3");
    CHECK(r.report["verdict"]["type"] == "StabilizedAt");
}

TEST_CASE("square of four points is complete already at p = 1") {
    AnalysisResult r = run_analyze(preset_config("4pt-square"));
    CHECK(r.report["verdict"]["type"] == "CompleteIntersection");
    CHECK(r.tower.limits[0].canonicalized() ==
          QIdeal(2, {parse_qpoly("z1^2", 2), parse_qpoly("z2^2", 2)}).canonicalized());
    CHECK(r.report["tower"][0]["length"] == 4);
    CHECK(r.report["tower"][0]["multiplicity"] == 4);
    CHECK(r.report["tower"][0]["complete_intersection"] == true);
}

TEST_CASE("stabilization search over a preset") {
    ordered_json s = run_search(preset_config("simplex-n2"));
    CHECK(s["first_stabilizing_p"] == 2);
    CHECK(s["divides_lcm"] == true);
    CHECK(s["lcm_1_to_n"] == 2);
    CHECK(s["e_sequence"][0]["multiplicity"] == 4);
    CHECK(s["e_sequence"][0]["stabilized"] == false);
    CHECK(s["e_sequence"][1]["multiplicity"] == 12);
    CHECK(s["e_sequence"][1]["stabilized"] == true);
    std::string txt = render_search_text(s);
    CHECK(txt.find("first stabilizing p: 2") != std::string::npos);
}

TEST_CASE("search refuses families without a single collision point") {
    AnalysisConfig cfg;
    cfg.variables = 2;
    cfg.generators = {"z1^2", "z2^2"};
    cfg.label = "gens";
    CHECK_THROWS_AS(run_search(cfg), user_error);
}

TEST_CASE("generator configs report bounds without a verdict") {
    AnalysisConfig cfg;
    cfg.variables = 2;
    cfg.generators = {"z1^2 - e*z2", "z2^2"};
    cfg.p_max = 2;
    cfg.label = "gens";
    AnalysisResult r = run_analyze(cfg);
    CHECK(r.report["verdict"]["type"] == "BoundsOnly");
    bool saw = false;
    for (auto& w : r.report["warnings"])
        if (w["code"] == "verdict-suppressed") saw = true;
    CHECK(saw);
    CHECK(!r.report["config"].contains("point_count"));
    CHECK(r.report["volume"]["upper_bound"] == "4");
    CHECK(!render_text_report(r.report).empty());
}

TEST_CASE("config validation") {
    ordered_json j;
    j["variables"] = 2;
    CHECK_THROWS_AS(config_from_json(j), user_error);
    j["points"] = ordered_json::array({{"0", "0"}});
    j["generators"] = ordered_json::array({"z1"});
    CHECK_THROWS_AS(config_from_json(j), user_error);
    j.erase("generators");
    j["p_max"] = 0;
    CHECK_THROWS_AS(config_from_json(j), user_error);
    j["p_max"] = 2;
    AnalysisConfig cfg = config_from_json(j);
    CHECK(cfg.points.size() == 1);
    CHECK(cfg.p_max == 2);

    CHECK_THROWS_AS(parse_eps_scalar("z1 + e", 2), user_error);
    CHECK(parse_eps_scalar("0", 2).is_zero());
    CHECK_THROWS_AS(config_from_file("/nonexistent/config.json"), user_error);
    CHECK_THROWS_AS(preset_config("nope"), user_error);
    CHECK(preset_names().size() == 7);
}

TEST_CASE("every light preset produces a coherent report") {
    for (const std::string& name : preset_names()) {
        if (name == "simplex-n3") continue;  // exercised by the acceptance runner
        AnalysisConfig cfg = preset_config(name);
        AnalysisResult r = run_analyze(cfg);
        CHECK(r.report["tower"].size() == static_cast<size_t>(cfg.p_max));
        // scaled multiplicities never undershoot the final upper bound
        Rational ub = rational_from_string(r.report["volume"]["upper_bound"].get<std::string>());
        for (auto& row : r.report["tower"]) {
            Rational sc = rational_from_string(row["scaled_multiplicity"].get<std::string>());
            CHECK(sc >= ub);
            CHECK(row["multiplicity"].get<long>() >= row["length"].get<long>());
        }
        CHECK(!render_text_report(r.report).empty());
    }
}
