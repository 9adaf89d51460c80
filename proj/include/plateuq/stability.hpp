#pragma once
#include <optional>
#include <vector>

#include "plateuq/grid.hpp"
#include "plateuq/interval.hpp"

namespace plateuq {

/// The one-step update in matrix form: interior rows (d, 1-2d, d),
/// boundary rows identity. Applying it reproduces step_crisp exactly.
struct UpdateMatrix {
    int size;
    double d;

    std::vector<double> apply(const std::vector<double>& u) const;
    /// Max absolute row sum: max(1, |1-2d| + 2|d|).
    double infinity_norm() const;
    /// Largest |eigenvalue|; the boundary rows contribute 1.
    double spectral_radius() const;
};

UpdateMatrix build_update_matrix(double d, int n);

struct StabilityReport {
    Interval d;
    double inf_norm;  // evaluated at the worst-case endpoint d.hi
    double K;
    bool stable;      // inf_norm <= K; for K = 1 exactly d.hi <= 1/2
    std::optional<double> max_stable_dt;     // filled when the grid is known
    std::optional<double> spectral_radius;   // diagnostic, needs the node count
};

/// Row-sum criterion over the d interval. Row sums are monotone in d for
/// d >= 0, so the worst case is the endpoint d.hi; no interval matrix
/// powers are needed.
StabilityReport check_stability(Interval d, double K = 1.0);

/// Full report for a concrete problem: adds the largest stable dt and the
/// spectral radius at d.hi.
StabilityReport stability_report(const IntervalParams& p, const GridSpec& g,
                                 double K = 1.0);

/// Growth history of a seeded initial error under the march.
struct ErrorProbe {
    double epsilon0;
    std::vector<double> growth;  // ||e_k||_inf / ||e_0||_inf, k = 0..steps
};

/// Runs an unperturbed and a perturbed march (+epsilon0 at the wall-adjacent
/// node) and returns the error-growth history. For this linear scheme the
/// history equals repeated UpdateMatrix application to the seed.
/// epsilon0 == 0 degenerates to an all-zero history.
ErrorProbe seeded_error_experiment(const PhysicalParams& p, const GridSpec& g,
                                   double epsilon0, int steps);
/// Interval variant, assessed at the worst-case endpoint d.hi.
ErrorProbe seeded_error_experiment(const IntervalParams& p, const GridSpec& g,
                                   double epsilon0, int steps);

}  // namespace plateuq
