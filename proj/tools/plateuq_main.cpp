// Command-line front end: crisp and fuzzy solves, case studies, stability
// reports, and the built-in verification suite. Emits CSV profiles and a
// JSON summary; exit codes: 0 ok, 1 validation failure, 2 instability,
// 3 verification failure.
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plateuq/crisp_solver.hpp"
#include "plateuq/output.hpp"
#include "plateuq/run_config.hpp"
#include "plateuq/scenario.hpp"
#include "plateuq/stability.hpp"
#include "plateuq/verification.hpp"

namespace fs = std::filesystem;
using namespace plateuq;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitInstability = 2;
constexpr int kExitVerification = 3;

struct GlobalArgs {
    std::string config_path;
    std::string out_dir;
    bool serial = false;
};

RunConfig make_config(const GlobalArgs& ga) {
    RunConfig cfg = ga.config_path.empty() ? parse_config("") : load_config(ga.config_path);
    if (!ga.out_dir.empty()) cfg.output_dir = ga.out_dir;
    if (ga.serial) cfg.options.parallel = false;
    return cfg;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw validation_error("cannot create output directory '" + dir.string() + "'");
    return dir;
}

int cmd_solve(const GlobalArgs& ga) {
    const RunConfig cfg = make_config(ga);
    const fs::path dir = ensure_out_dir(cfg);
    const GridSpec grid = cfg.make_grid(FuzzySet{});
    const CrispField sol =
        solve_crisp(cfg.params.nominal(), grid, {false, cfg.options.parallel});
    const fs::path csv = dir / "crisp.csv";
    write_csv(csv, records_from_crisp("crisp", sol));
    std::cout << "wrote " << csv.string() << " (" << grid.nodes << " nodes, dt=" << grid.dt
              << ", " << grid.record_times.size() << " times)\n";
    return 0;
}

int cmd_fuzzy_solve(const GlobalArgs& ga, const std::string& fuzzy_csv) {
    const RunConfig cfg = make_config(ga);
    const FuzzySet set = FuzzySet::parse(fuzzy_csv);
    if (set.empty())
        throw validation_error("fuzzy-solve: --fuzzy must name at least one of nu,h,u0");
    const fs::path dir = ensure_out_dir(cfg);
    const GridSpec grid = cfg.make_grid(set);
    const ScenarioSpec spec{set, cfg.params, grid, cfg.levels, cfg.options};
    const CaseResult result = run_case(spec);

    const fs::path csv = dir / ("case_" + result.id + ".csv");
    write_csv(csv, records_from_field(result.id, result.fuzzy_field));

    SummaryInputs si;
    si.cfg = &cfg;
    si.grid = grid;
    si.cases = {&result};
    const StabilityReport stab =
        stability_report(params_at_alpha(effective_params(spec), cfg.levels.widest()), grid);
    si.stability = &stab;
    write_text_file(dir / "summary.json", summary_json(si));

    std::cout << "wrote " << csv.string() << " and " << (dir / "summary.json").string()
              << "\n";
    return 0;
}

int cmd_case_all(const GlobalArgs& ga) {
    const RunConfig cfg = make_config(ga);
    const fs::path dir = ensure_out_dir(cfg);
    // One shared grid, resolved for the widest (all-fuzzy) box, so widths
    // are comparable across cases.
    const GridSpec grid = cfg.make_grid(FuzzySet::all());

    std::vector<CaseResult> results;
    results.reserve(7);
    for (const FuzzySet& set : FuzzySet::all_combinations()) {
        const ScenarioSpec spec{set, cfg.params, grid, cfg.levels, cfg.options};
        results.push_back(run_case(spec));
        const CaseResult& r = results.back();
        write_csv(dir / ("case_" + r.id + ".csv"),
                  records_from_field(r.id, r.fuzzy_field));
    }

    const SensitivityReport sens =
        sensitivity_ranking(cfg.params, grid, cfg.levels, cfg.options);
    const StabilityReport stab =
        stability_report(params_at_alpha(cfg.params, cfg.levels.widest()), grid);

    SummaryInputs si;
    si.cfg = &cfg;
    si.grid = grid;
    for (const CaseResult& r : results) si.cases.push_back(&r);
    si.sensitivity = &sens;
    si.stability = &stab;
    write_text_file(dir / "summary.json", summary_json(si));

    std::cout << "wrote " << results.size() << " case CSVs and "
              << (dir / "summary.json").string() << "\n";
    return 0;
}

int cmd_stability(const GlobalArgs& ga, double K, double epsilon0, int steps) {
    const RunConfig cfg = make_config(ga);
    const fs::path dir = ensure_out_dir(cfg);
    const GridSpec grid = cfg.make_grid(FuzzySet::all());
    const IntervalParams box = params_at_alpha(cfg.params, cfg.levels.widest());
    const StabilityReport report = stability_report(box, grid, K);

    const double eps = epsilon0 > 0.0 ? epsilon0 : 1e-3 * cfg.params.u0.nominal;
    const ErrorProbe probe =
        seeded_error_experiment(cfg.params.nominal(), grid, eps, steps);

    SummaryInputs si;
    si.cfg = &cfg;
    si.grid = grid;
    si.stability = &report;
    si.probe = &probe;
    write_text_file(dir / "stability.json", summary_json(si));

    std::cout << "d = " << to_string(report.d) << ", inf_norm = " << report.inf_norm
              << ", " << (report.stable ? "stable" : "UNSTABLE") << " (K=" << report.K
              << ")\n"
              << "wrote " << (dir / "stability.json").string() << "\n";
    return 0;
}

int cmd_verify(const GlobalArgs& ga) {
    const RunConfig cfg = make_config(ga);
    const std::vector<CheckResult> checks = run_verification(cfg);
    for (const auto& c : checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
                  << "\n";
    if (!all_passed(checks)) {
        std::cout << "verification FAILED\n";
        return kExitVerification;
    }
    std::cout << "verification passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy/interval uncertainty propagation for the impulsively "
                 "started parallel-plate flow"};
    app.require_subcommand(1);

    GlobalArgs ga;
    app.add_option("--config", ga.config_path, "JSON config file (omit for defaults)");
    app.add_option("--out", ga.out_dir, "output directory (overrides config)");
    app.add_flag("--serial", ga.serial, "disable OpenMP parallel paths");

    auto* solve = app.add_subcommand("solve", "crisp solve at the nominal parameters");

    std::string fuzzy_csv;
    auto* fuzzy_solve =
        app.add_subcommand("fuzzy-solve", "one fuzzy case (per-alpha envelopes)");
    fuzzy_solve->add_option("--fuzzy", fuzzy_csv, "comma list from {nu,h,u0}")
        ->required();

    bool case_all = false;
    auto* case_cmd = app.add_subcommand("case", "the seven fuzzy combinations");
    case_cmd->add_flag("--all", case_all, "run all seven combinations");

    double K = 1.0, epsilon0 = 0.0;
    int steps = 500;
    auto* stability = app.add_subcommand("stability", "stability report + error probe");
    stability->add_option("--K", K, "norm bound constant (default 1)");
    stability->add_option("--epsilon0", epsilon0,
                          "seed error magnitude (default 1e-3 * nominal u0)");
    stability->add_option("--steps", steps, "probe steps (default 500)");

    auto* verify = app.add_subcommand("verify", "run the oracle suite");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(ga);
        if (fuzzy_solve->parsed()) return cmd_fuzzy_solve(ga, fuzzy_csv);
        if (case_cmd->parsed()) {
            if (!case_all)
                throw validation_error(
                    "case: pass --all (single combinations: fuzzy-solve --fuzzy ...)");
            return cmd_case_all(ga);
        }
        if (stability->parsed()) return cmd_stability(ga, K, epsilon0, steps);
        if (verify->parsed()) return cmd_verify(ga);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    } catch (const instability_error& e) {
        std::cerr << "error (instability): " << e.what() << "\n";
        return kExitInstability;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
