#pragma once
#include <optional>
#include <string>
#include <vector>

#include "plateuq/grid.hpp"
#include "plateuq/interval_solver.hpp"
#include "plateuq/scenario.hpp"

namespace plateuq {

/// Fully resolved run configuration. Defaults reproduce the reference
/// parameter set: nu = (1.80e-4, 2.17e-4, 2.50e-4) m^2/s,
/// h = (0.030, 0.040, 0.050) m, u0 = (30, 40, 50) m/s, N = 41 nodes,
/// auto dt targeting d <= 0.45, record times 0.18..1.08 s, 11 alpha levels.
struct RunConfig {
    FuzzyParams params;
    int nodes = 41;
    std::optional<double> dt;  // nullopt -> auto per fuzzy set
    double d_max = 0.45;
    std::vector<double> record_times{0.18, 0.36, 0.54, 0.72, 0.90, 1.08};
    AlphaLevels levels = AlphaLevels::uniform(11);
    SolveOptions options{};
    std::string output_dir = "out";

    std::vector<std::string> defaults_applied;  // dotted paths left at default
    std::string config_hash;                    // FNV-1a of the canonical form

    RunConfig();

    /// Concrete grid for a run over `fuzzy`: explicit dt if configured,
    /// otherwise auto-resolved from sup(nu/h^2) at the widest alpha level.
    GridSpec make_grid(const FuzzySet& fuzzy) const;
};

/// Strict JSON config loader: unknown keys are rejected with their path,
/// omitted fields take the documented defaults, all type invariants are
/// validated. An empty or whitespace-only file means "all defaults".
RunConfig load_config(const std::string& path);

/// In-memory variant of load_config (used by tests).
RunConfig parse_config(const std::string& json_text);

/// Canonical serialized form (sorted keys, resolved defaults); the config
/// hash is FNV-1a 64 over this string.
std::string canonical_config(const RunConfig& cfg);

}  // namespace plateuq
