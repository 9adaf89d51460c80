#include "plateuq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "plateuq/crisp_solver.hpp"

namespace plateuq {

bool FuzzySet::is_subset_of(const FuzzySet& other) const {
    return (!nu || other.nu) && (!h || other.h) && (!u0 || other.u0);
}

std::string FuzzySet::id() const {
    if (empty()) return "crisp";
    std::string s;
    if (nu) s += "nu";
    if (h) s += s.empty() ? "h" : "_h";
    if (u0) s += s.empty() ? "u0" : "_u0";
    return s;
}

FuzzySet FuzzySet::parse(const std::string& csv) {
    FuzzySet set;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "nu") set.nu = true;
        else if (tok == "h") set.h = true;
        else if (tok == "u0") set.u0 = true;
        else if (!tok.empty())
            throw validation_error("unknown fuzzy parameter '" + tok +
                                   "' (expected nu, h, u0)");
    }
    return set;
}

std::vector<FuzzySet> FuzzySet::all_combinations() {
    return {
        {true, false, false}, {false, true, false}, {false, false, true},
        {true, true, false},  {false, true, true},  {true, false, true},
        {true, true, true},
    };
}

FuzzyParams effective_params(const FuzzySet& set, const FuzzyParams& tfns) {
    return {set.nu ? tfns.nu : TriangularFuzzyNumber::crisp(tfns.nu.nominal),
            set.h ? tfns.h : TriangularFuzzyNumber::crisp(tfns.h.nominal),
            set.u0 ? tfns.u0 : TriangularFuzzyNumber::crisp(tfns.u0.nominal)};
}

FuzzyParams effective_params(const ScenarioSpec& spec) {
    return effective_params(spec.fuzzy_set, spec.tfns);
}

namespace {

CrispField corner_solve(const PhysicalParams& p, const GridSpec& g, double d_max) {
    if (diffusion_number(p, g) <= 0.5)
        return solve_crisp(p, g);
    // Unstable on the shared grid: pick this corner's own dt for the same
    // record times (they stay exact multiples).
    const double dt = resolve_dt(p.nu / (p.h * p.h), g.nodes, g.record_times, d_max);
    return solve_crisp(p, GridSpec(g.nodes, dt, g.record_times));
}

}  // namespace

IntervalField vertex_oracle(const ScenarioSpec& spec, double alpha) {
    const FuzzyParams eff = effective_params(spec);
    const IntervalParams box = params_at_alpha(eff, alpha);

    const int m = spec.fuzzy_set.count();
    const int corners = 1 << m;

    std::vector<CrispField> solutions(static_cast<std::size_t>(corners));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(corners));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (spec.options.parallel)
#endif
    for (int c = 0; c < corners; ++c) {
        try {
            int bit = 0;
            auto pick = [&](bool fuzzy, const Interval& iv, double nominal) {
                if (!fuzzy) return nominal;
                const double v = (c >> bit) & 1 ? iv.hi : iv.lo;
                ++bit;
                return v;
            };
            const double nu = pick(spec.fuzzy_set.nu, box.nu, box.nu.lo);
            const double h = pick(spec.fuzzy_set.h, box.h, box.h.lo);
            const double u0 = pick(spec.fuzzy_set.u0, box.u0, box.u0.lo);
            solutions[static_cast<std::size_t>(c)] =
                corner_solve(PhysicalParams(nu, h, u0), spec.grid, 0.45);
        } catch (...) {
            errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    IntervalField env;
    env.times = spec.grid.record_times;
    env.u.resize(env.times.size());
    for (std::size_t ti = 0; ti < env.times.size(); ++ti) {
        const std::size_t n = solutions[0].u[ti].size();
        std::vector<Interval> row(n);
        for (std::size_t j = 0; j < n; ++j) {
            double lo = solutions[0].u[ti][j];
            double hi = lo;
            for (int c = 1; c < corners; ++c) {
                const double v = solutions[static_cast<std::size_t>(c)].u[ti][j];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            row[j] = Interval(lo, hi);
        }
        env.u[ti] = std::move(row);
    }
    return env;
}

WidthMetrics width_metrics(const FuzzyField& field) {
    WidthMetrics wm;
    wm.alpha = field.levels.front();
    const IntervalField& f = field.support();
    wm.times = f.times;
    wm.mean_width_per_time.reserve(f.times.size());
    wm.width_profile.reserve(f.times.size());
    double total = 0.0;
    for (const auto& row : f.u) {
        std::vector<double> profile(row.size());
        double sum = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            profile[j] = width(row[j]);
            if (j > 0 && j + 1 < row.size()) sum += profile[j];
        }
        const double mean = row.size() > 2 ? sum / double(row.size() - 2) : 0.0;
        wm.mean_width_per_time.push_back(mean);
        wm.width_profile.push_back(std::move(profile));
        total += mean;
    }
    wm.time_averaged_mean_width =
        f.times.empty() ? 0.0 : total / double(f.times.size());
    return wm;
}

WidthMetrics width_metrics(const CaseResult& result) {
    return width_metrics(result.fuzzy_field);
}

CaseResult run_case(const ScenarioSpec& spec) {
    CaseResult r;
    r.id = spec.fuzzy_set.id();
    r.fuzzy_set = spec.fuzzy_set;
    const FuzzyParams eff = effective_params(spec);
    r.fuzzy_field = solve_fuzzy(eff, spec.grid, spec.levels, spec.options);
    r.vertex_envelope.levels = spec.levels.levels;
    r.vertex_envelope.per_alpha.reserve(spec.levels.size());
    for (double a : spec.levels.levels)
        r.vertex_envelope.per_alpha.push_back(vertex_oracle(spec, a));
    r.widths = width_metrics(r.fuzzy_field);
    return r;
}

SensitivityReport sensitivity_ranking(const FuzzyParams& tfns, const GridSpec& grid,
                                      const AlphaLevels& levels,
                                      const SolveOptions& options) {
    const std::vector<FuzzySet> singles = {
        {true, false, false}, {false, true, false}, {false, false, true}};
    SensitivityReport rep;
    rep.ranking.reserve(singles.size());
    double w_nu = 0.0, w_h = 0.0, w_u0 = 0.0;
    for (const FuzzySet& set : singles) {
        ScenarioSpec spec{set, tfns, grid, levels, options};
        const FuzzyField field = solve_fuzzy(effective_params(spec), grid, levels, options);
        const double w = width_metrics(field).time_averaged_mean_width;
        rep.ranking.push_back({set.id(), w});
        if (set.nu) w_nu = w;
        if (set.h) w_h = w;
        if (set.u0) w_u0 = w;
    }
    std::stable_sort(rep.ranking.begin(), rep.ranking.end(),
                     [](const auto& a, const auto& b) {
                         return a.time_averaged_mean_width > b.time_averaged_mean_width;
                     });
    rep.nu_least_sensitive = w_h > w_nu && w_u0 > w_nu;
    return rep;
}

}  // namespace plateuq
