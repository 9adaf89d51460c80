#include "plateuq/stability.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "plateuq/crisp_solver.hpp"

namespace plateuq {

std::vector<double> UpdateMatrix::apply(const std::vector<double>& u) const {
    if (u.size() != static_cast<std::size_t>(size))
        throw validation_error("UpdateMatrix::apply: size mismatch");
    std::vector<double> out(u.size());
    out.front() = u.front();
    out.back() = u.back();
    for (std::size_t j = 1; j + 1 < u.size(); ++j)
        out[j] = d * u[j - 1] + (1.0 - 2.0 * d) * u[j] + d * u[j + 1];
    return out;
}

double UpdateMatrix::infinity_norm() const {
    return std::max(1.0, std::abs(1.0 - 2.0 * d) + 2.0 * std::abs(d));
}

double UpdateMatrix::spectral_radius() const {
    // Permuting the boundary nodes first makes the matrix block triangular:
    // eigenvalues are {1, 1} plus the interior tridiagonal Toeplitz spectrum
    // 1 - 2d(1 - cos(m pi / (size-1))).
    constexpr double pi = std::numbers::pi;
    double rho = 1.0;
    for (int m = 1; m <= size - 2; ++m) {
        const double lambda = 1.0 - 2.0 * d * (1.0 - std::cos(m * pi / (size - 1)));
        rho = std::max(rho, std::abs(lambda));
    }
    return rho;
}

UpdateMatrix build_update_matrix(double d, int n) {
    if (n < 3)
        throw validation_error("build_update_matrix: need at least 3 nodes");
    return UpdateMatrix{n, d};
}

StabilityReport check_stability(Interval d, double K) {
    if (!(d.lo >= 0.0))
        throw validation_error("check_stability: d.lo must be >= 0");
    StabilityReport r;
    r.d = d;
    r.K = K;
    r.inf_norm = std::abs(1.0 - 2.0 * d.hi) + 2.0 * d.hi;
    r.stable = r.inf_norm <= K;
    return r;
}

StabilityReport stability_report(const IntervalParams& p, const GridSpec& g, double K) {
    const Interval d = diffusion_number(p, g);
    StabilityReport r = check_stability(d, K);
    // inf_norm = max(1, 4d-1) <= K  <=>  d <= (K+1)/4, and d scales linearly
    // with dt.
    const double d_allow = (K + 1.0) / 4.0;
    r.max_stable_dt = d.hi > 0.0 ? g.dt * d_allow / d.hi
                                 : std::numeric_limits<double>::infinity();
    r.spectral_radius = build_update_matrix(d.hi, g.nodes).spectral_radius();
    return r;
}

namespace {

double inf_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

ErrorProbe probe_at(double d, int nodes, double u0, double epsilon0, int steps) {
    ErrorProbe probe;
    probe.epsilon0 = epsilon0;
    probe.growth.assign(static_cast<std::size_t>(steps) + 1, 0.0);
    if (epsilon0 == 0.0) return probe;  // degenerate by convention

    std::vector<double> base(static_cast<std::size_t>(nodes), 0.0);
    base[0] = u0;
    std::vector<double> pert = base;
    pert[1] += epsilon0;

    probe.growth[0] = 1.0;
    for (int k = 1; k <= steps; ++k) {
        base = step_crisp(base, d);
        pert = step_crisp(pert, d);
        probe.growth[static_cast<std::size_t>(k)] = inf_norm_diff(pert, base) / epsilon0;
    }
    return probe;
}

}  // namespace

ErrorProbe seeded_error_experiment(const PhysicalParams& p, const GridSpec& g,
                                   double epsilon0, int steps) {
    if (epsilon0 < 0.0)
        throw validation_error("seeded_error_experiment: epsilon0 must be >= 0");
    if (steps < 0)
        throw validation_error("seeded_error_experiment: steps must be >= 0");
    return probe_at(diffusion_number(p, g), g.nodes, p.u0, epsilon0, steps);
}

ErrorProbe seeded_error_experiment(const IntervalParams& p, const GridSpec& g,
                                   double epsilon0, int steps) {
    if (epsilon0 < 0.0)
        throw validation_error("seeded_error_experiment: epsilon0 must be >= 0");
    if (steps < 0)
        throw validation_error("seeded_error_experiment: steps must be >= 0");
    const Interval d = diffusion_number(p, g);
    return probe_at(d.hi, g.nodes, p.u0.hi, epsilon0, steps);
}

}  // namespace plateuq
