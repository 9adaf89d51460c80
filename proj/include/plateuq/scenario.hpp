#pragma once
#include <string>
#include <vector>

#include "plateuq/fields.hpp"
#include "plateuq/grid.hpp"
#include "plateuq/interval_solver.hpp"

namespace plateuq {

/// Which of {nu, h, u0} carry their fuzzy spread; the rest collapse to
/// their crisp nominal.
struct FuzzySet {
    bool nu = false;
    bool h = false;
    bool u0 = false;

    int count() const { return int(nu) + int(h) + int(u0); }
    bool empty() const { return count() == 0; }
    bool is_subset_of(const FuzzySet& other) const;
    /// Stable identifier: "crisp", "nu", "h", "u0", "nu_h", "h_u0",
    /// "nu_u0", "nu_h_u0".
    std::string id() const;

    static FuzzySet all() { return {true, true, true}; }
    static FuzzySet parse(const std::string& csv);  // e.g. "nu,h"
    /// The seven nonempty combinations, singles first.
    static std::vector<FuzzySet> all_combinations();
};

struct ScenarioSpec {
    FuzzySet fuzzy_set;
    FuzzyParams tfns;
    GridSpec grid;
    AlphaLevels levels;
    SolveOptions options;
};

/// Per-time width statistics of an envelope, taken at one alpha level
/// (the widest configured level). Interior nodes only.
struct WidthMetrics {
    double alpha;
    std::vector<double> times;
    std::vector<double> mean_width_per_time;
    std::vector<std::vector<double>> width_profile;  // per time, per node
    double time_averaged_mean_width;
};

struct CaseResult {
    std::string id;
    FuzzySet fuzzy_set;
    FuzzyField fuzzy_field;
    FuzzyField vertex_envelope;  // per alpha, same layout as fuzzy_field
    WidthMetrics widths;
};

/// Effective fuzzy parameters: members outside fuzzy_set collapse to
/// crisp nominals.
FuzzyParams effective_params(const FuzzySet& set, const FuzzyParams& tfns);
FuzzyParams effective_params(const ScenarioSpec& spec);

/// Node-wise min/max over the 2^m crisp solves at the alpha-cut endpoint
/// combinations of the fuzzy parameters. Each corner reuses the scenario
/// grid when stable and otherwise resolves its own dt for the same record
/// times. Corners may run concurrently; the reduction is ordered.
IntervalField vertex_oracle(const ScenarioSpec& spec, double alpha);

WidthMetrics width_metrics(const FuzzyField& field);
WidthMetrics width_metrics(const CaseResult& result);

/// Fuzzy solve + per-level vertex envelope + width metrics.
CaseResult run_case(const ScenarioSpec& spec);

struct SensitivityReport {
    struct Entry {
        std::string id;
        double time_averaged_mean_width;
    };
    std::vector<Entry> ranking;  // descending width; deterministic tie order
    bool nu_least_sensitive;     // both h and u0 cases strictly exceed nu
};

/// Runs the three single-parameter cases and ranks them.
SensitivityReport sensitivity_ranking(const FuzzyParams& tfns, const GridSpec& grid,
                                      const AlphaLevels& levels,
                                      const SolveOptions& options = {});

}  // namespace plateuq
