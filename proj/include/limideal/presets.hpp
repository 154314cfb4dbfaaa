#pragma once

#include <string>
#include <vector>

#include "limideal/analyze.hpp"

namespace limideal {

// Shipped example configurations.  Point coordinates are polynomial
// expressions in the parameter e; rows are parsed by the same path as user
// configs.
inline AnalysisConfig preset_config(const std::string& name) {
    AnalysisConfig cfg;
    cfg.label = name;
    if (name == "two-point") {
        cfg.variables = 2;
        cfg.points = {{"0", "0"}, {"e", "0"}};
        cfg.p_max = 2;
    } else if (name == "generic-3pt") {
        cfg.variables = 2;
        cfg.points = {{"0", "0"}, {"e", "0"}, {"0", "e"}};
        cfg.p_max = 2;
    } else if (name == "degenerate-3pt") {
        // second point approaches along a tangential speed: e^2 against e
        cfg.variables = 2;
        cfg.points = {{"0", "0"}, {"e^2", "0"}, {"0", "e"}};
        cfg.p_max = 2;
    } else if (name == "dqht-3pt") {
        // distinct quadratic speeds plus a higher-order tilt
        cfg.variables = 2;
        cfg.points = {{"0", "0"}, {"e^2", "0"}, {"e^2+e^3", "e^4+e^5"}};
        cfg.p_max = 2;
    } else if (name == "4pt-square") {
        cfg.variables = 2;
        cfg.points = {{"0", "0"}, {"e", "0"}, {"0", "e"}, {"e", "e"}};
        cfg.p_max = 2;
    } else if (name == "simplex-n2") {
        cfg.variables = 2;
        cfg.points = {{"0", "0"}, {"e", "0"}, {"0", "e"}};
        cfg.p_max = 2;
    } else if (name == "simplex-n3") {
        cfg.variables = 3;
        cfg.points = {{"0", "0", "0"}, {"e", "0", "0"}, {"0", "e", "0"}, {"0", "0", "e"}};
        cfg.p_max = 6;
    } else {
        throw user_error(errc::unknown_preset, "no preset named '" + name + "'");
    }
    return cfg;
}

inline std::vector<std::string> preset_names() {
    return {"two-point",  "generic-3pt", "degenerate-3pt", "dqht-3pt",
            "4pt-square", "simplex-n2",  "simplex-n3"};
}

}  // namespace limideal
