#pragma once
#include <vector>

#include "plateuq/fuzzy.hpp"
#include "plateuq/interval.hpp"

namespace plateuq {

/// Crisp problem parameters, SI units: kinematic viscosity nu [m^2/s],
/// plate spacing h [m], impulsive wall speed u0 [m/s].
struct PhysicalParams {
    double nu;
    double h;
    double u0;

    PhysicalParams(double nu_, double h_, double u0_);
};

/// Interval-valued parameters (one alpha-cut of the fuzzy problem).
struct IntervalParams {
    Interval nu;
    Interval h;
    Interval u0;

    IntervalParams(Interval nu_, Interval h_, Interval u0_);

    bool is_degenerate() const {
        return nu.is_degenerate() && h.is_degenerate() && u0.is_degenerate();
    }
    PhysicalParams nominal() const;  // midpoints
};

/// One triangular fuzzy number per parameter.
struct FuzzyParams {
    TriangularFuzzyNumber nu;
    TriangularFuzzyNumber h;
    TriangularFuzzyNumber u0;

    FuzzyParams(TriangularFuzzyNumber nu_, TriangularFuzzyNumber h_,
                TriangularFuzzyNumber u0_);

    PhysicalParams nominal() const { return {nu.nominal, h.nominal, u0.nominal}; }
};

IntervalParams params_at_alpha(const FuzzyParams& fp, double alpha);

/// Uniform grid on the normalized domain y_hat in [0, 1] plus the time
/// discretization. Every record time must be an integer multiple of dt
/// (within 1e-9 relative).
struct GridSpec {
    int nodes;                        // including both walls, >= 3
    double dt;                        // seconds
    std::vector<double> record_times; // seconds, strictly increasing, >= 0

    GridSpec(int nodes_, double dt_, std::vector<double> record_times_);

    double dy_hat() const { return 1.0 / (nodes - 1); }
    long long step_index(double t) const;
    long long total_steps() const;
};

/// d = (nu/h^2) * dt / dy_hat^2; FTCS is stable for d <= 1/2.
double diffusion_number(const PhysicalParams& p, const GridSpec& g);
Interval diffusion_number(const IntervalParams& p, const GridSpec& g,
                          ArithmeticMode mode = ArithmeticMode::limit);

/// Picks dt = base/k (base = smallest positive record time) with the
/// smallest k such that sup d <= d_max and every record time stays an
/// integer multiple of dt. c_sup is the upper bound of nu/h^2 [1/s].
double resolve_dt(double c_sup, int nodes, const std::vector<double>& record_times,
                  double d_max = 0.45);

}  // namespace plateuq
