#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "limideal/analyze.hpp"
#include "limideal/presets.hpp"

using namespace limideal;

namespace {

// The engine is single threaded; the variable is honored as a cap so scripts
// that set it keep working, and a bad value is still a usage error.
void check_thread_env() {
    const char* v = std::getenv("LIMIDEAL_THREADS");
    if (!v) return;
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || t < 1)
        throw user_error(errc::config_error,
                         "LIMIDEAL_THREADS must be a positive integer, got '" + std::string(v) +
                             "'");
}

void emit(const AnalysisResult& r, bool json) {
    if (json)
        std::cout << r.report.dump(2) << "\n";
    else
        std::cout << render_text_report(r.report);
}

int run(int argc, char** argv) {
    CLI::App app{"flat limits of collapsing point families and their singularity data"};
    app.require_subcommand(1);

    std::string config_path, preset_name, gen_path, poly_text;
    int p_override = 0, p = 1, p_max = 0;
    bool as_json = false;

    CLI::App* an = app.add_subcommand("analyze", "full report for a family config");
    an->add_option("--config", config_path, "JSON config file")->required();
    an->add_flag("--json", as_json, "machine readable output");

    CLI::App* pr = app.add_subcommand("preset", "run a named built-in family");
    pr->add_option("name", preset_name, "preset name")->required();
    pr->add_option("--p-max", p_override, "override the preset power range");
    pr->add_flag("--json", as_json, "machine readable output");

    CLI::App* mu = app.add_subcommand("mult", "length and multiplicity of one ideal");
    mu->add_option("--generators", gen_path, "JSON config file with a 'generators' list")
        ->required();
    mu->add_flag("--json", as_json, "machine readable output");

    CLI::App* me = app.add_subcommand("member", "test membership in a limit ideal");
    me->add_option("--poly", poly_text, "polynomial to test")->required();
    me->add_option("--config", config_path, "JSON config file")->required();
    me->add_option("--p", p, "power of the family")->required();

    CLI::App* se = app.add_subcommand("search", "scan powers for multiplicity stabilization");
    se->add_option("--config", config_path, "JSON config file")->required();
    se->add_option("--p-max", p_max, "largest power to scan");
    se->add_flag("--json", as_json, "machine readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    check_thread_env();

    if (an->parsed()) {
        emit(run_analyze(config_from_file(config_path)), as_json);
        return 0;
    }
    if (pr->parsed()) {
        AnalysisConfig cfg = preset_config(preset_name);
        if (p_override > 0) cfg.p_max = p_override;
        emit(run_analyze(cfg), as_json);
        return 0;
    }
    if (mu->parsed()) {
        AnalysisConfig cfg = config_from_file(gen_path);
        if (!cfg.points.empty())
            throw user_error(errc::config_error, "mult expects 'generators', not 'points'");
        std::vector<QPoly> gens;
        for (auto& g : cfg.generators) gens.push_back(parse_qpoly(g, cfg.variables));
        QIdeal I(cfg.variables, std::move(gens));
        MultiplicityPolicy pol;
        pol.k_budget = cfg.k_budget;
        pol.trials = cfg.trials;
        pol.seed = cfg.seed;
        MultiplicityReport rep = hs_multiplicity(I, pol);
        if (as_json) {
            ordered_json o;
            o["length"] = rep.length;
            o["multiplicity"] = rep.multiplicity;
            o["method"] = rep.method;
            o["certified"] = rep.certified;
            o["complete_intersection"] = rep.complete_intersection;
            std::cout << o.dump(2) << "\n";
        } else {
            std::cout << "length: " << rep.length << "\n"
                      << "multiplicity: " << rep.multiplicity << " (" << rep.method
                      << (rep.certified ? ", certified" : "") << ")\n"
                      << "complete intersection: " << (rep.complete_intersection ? "yes" : "no")
                      << "\n";
        }
        return 0;
    }
    if (me->parsed()) {
        if (p < 1) throw user_error(errc::config_error, "--p must be at least 1");
        AnalysisConfig cfg = config_from_file(config_path);
        FamilyContext ctx = family_from_config(cfg);
        QPoly f = parse_qpoly(poly_text, cfg.variables);
        bool in = membership_in_limit(f, ctx, p);
        std::cout << (in ? "member" : "not a member") << "\n";
        return 0;
    }
    if (se->parsed()) {
        AnalysisConfig cfg = config_from_file(config_path);
        if (p_max > 0) cfg.p_max = p_max;
        ordered_json s = run_search(cfg);
        if (as_json)
            std::cout << s.dump(2) << "\n";
        else
            std::cout << render_search_text(s);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const user_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
