#include "plateuq/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plateuq/crisp_solver.hpp"
#include "plateuq/series_solution.hpp"

namespace plateuq {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

}  // namespace

std::vector<CheckResult> run_verification(const RunConfig& cfg,
                                          const VerificationOptions& opts) {
    std::vector<CheckResult> checks;

    // 1. Crisp solve against the closed-form series, nominal parameters.
    {
        const PhysicalParams nominal = cfg.params.nominal();
        const GridSpec grid = cfg.make_grid(FuzzySet{});
        const CrispField sol = solve_crisp(nominal, grid, {false, cfg.options.parallel});
        double worst = 0.0;
        for (std::size_t ti = 0; ti < sol.times.size(); ++ti) {
            const std::vector<double> ref =
                series_profile(nominal, grid.nodes, sol.times[ti], opts.series_terms);
            for (std::size_t j = 0; j < ref.size(); ++j)
                worst = std::max(worst, std::abs(sol.u[ti][j] - ref[j]));
        }
        const double frac = nominal.u0 > 0 ? worst / nominal.u0 : worst;
        checks.push_back({"series_match",
                          frac <= opts.series_tol_frac,
                          "max |fdm - series| = " + fmt(frac * 100.0) + "% of u0 (tol " +
                              fmt(opts.series_tol_frac * 100.0) + "%)"});
    }

    // 2. Vertex envelope contained in the interval field, all seven
    //    combinations, alpha in {0, 0.5}.
    {
        bool all_ok = true;
        double worst_gap = 0.0;
        std::string first_fail;
        const GridSpec grid = cfg.make_grid(FuzzySet::all());
        for (const FuzzySet& set : FuzzySet::all_combinations()) {
            for (double alpha : {0.0, 0.5}) {
                const AlphaLevels two({alpha, 1.0});
                const ScenarioSpec spec{set, cfg.params, grid, two, cfg.options};
                const FuzzyField field =
                    solve_fuzzy(effective_params(spec), grid, two, cfg.options);
                const IntervalField env = vertex_oracle(spec, alpha);
                const IntervalField& ivf = field.per_alpha.front();
                for (std::size_t ti = 0; ti < env.times.size(); ++ti) {
                    for (std::size_t j = 0; j < env.u[ti].size(); ++j) {
                        const double gap =
                            std::max(ivf.u[ti][j].lo - env.u[ti][j].lo,
                                     env.u[ti][j].hi - ivf.u[ti][j].hi);
                        worst_gap = std::max(worst_gap, gap);
                        if (gap > opts.containment_slack && all_ok) {
                            all_ok = false;
                            first_fail = set.id() + " alpha=" + fmt(alpha);
                        }
                    }
                }
            }
        }
        checks.push_back({"vertex_containment", all_ok,
                          all_ok ? "all 7 combinations at alpha {0, 0.5}; worst gap " +
                                       fmt(worst_gap)
                                 : "violated for " + first_fail + "; worst gap " +
                                       fmt(worst_gap)});
    }

    // 3. alpha = 1 collapse onto the crisp solve.
    {
        const GridSpec grid = cfg.make_grid(FuzzySet::all());
        const FuzzyField field =
            solve_fuzzy(cfg.params, grid, cfg.levels, cfg.options);
        const CrispField crisp =
            solve_crisp(cfg.params.nominal(), grid, {false, cfg.options.parallel});
        const IntervalField& core = field.core();
        double worst = 0.0;
        for (std::size_t ti = 0; ti < core.times.size(); ++ti) {
            for (std::size_t j = 0; j < core.u[ti].size(); ++j) {
                const double ref = crisp.u[ti][j];
                const double scale = std::max(std::abs(ref), 1.0);
                worst = std::max({worst, std::abs(core.u[ti][j].lo - ref) / scale,
                                  std::abs(core.u[ti][j].hi - ref) / scale});
            }
        }
        checks.push_back({"alpha_one_collapse", worst <= opts.collapse_rel_tol,
                          "max relative deviation " + fmt(worst) + " (tol " +
                              fmt(opts.collapse_rel_tol) + ")"});
    }

    return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

}  // namespace plateuq
