#include "plateuq/grid.hpp"

#include <cmath>
#include <sstream>

namespace plateuq {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        std::ostringstream os;
        os << what << ": non-finite value " << x;
        throw validation_error(os.str());
    }
}

bool is_multiple(double t, double dt) {
    const double k = std::round(t / dt);
    if (k < 0) return false;
    return std::abs(t - k * dt) <= 1e-9 * std::max(std::abs(t), dt);
}

}  // namespace

PhysicalParams::PhysicalParams(double nu_, double h_, double u0_)
    : nu(nu_), h(h_), u0(u0_) {
    require_finite(nu, "PhysicalParams.nu");
    require_finite(h, "PhysicalParams.h");
    require_finite(u0, "PhysicalParams.u0");
    if (!(nu > 0.0)) throw validation_error("PhysicalParams: nu must be > 0");
    if (!(h > 0.0)) throw validation_error("PhysicalParams: h must be > 0");
    if (!(u0 >= 0.0)) throw validation_error("PhysicalParams: u0 must be >= 0");
}

IntervalParams::IntervalParams(Interval nu_, Interval h_, Interval u0_)
    : nu(nu_), h(h_), u0(u0_) {
    if (!(nu.lo > 0.0)) throw validation_error("IntervalParams: nu.lo must be > 0");
    if (!(h.lo > 0.0)) throw validation_error("IntervalParams: h.lo must be > 0");
    if (!(u0.lo >= 0.0)) throw validation_error("IntervalParams: u0.lo must be >= 0");
}

PhysicalParams IntervalParams::nominal() const {
    return {nu.mid(), h.mid(), u0.mid()};
}

FuzzyParams::FuzzyParams(TriangularFuzzyNumber nu_, TriangularFuzzyNumber h_,
                         TriangularFuzzyNumber u0_)
    : nu(nu_), h(h_), u0(u0_) {
    if (!(nu.left > 0.0)) throw validation_error("FuzzyParams: nu support must be > 0");
    if (!(h.left > 0.0)) throw validation_error("FuzzyParams: h support must be > 0");
    if (!(u0.left >= 0.0)) throw validation_error("FuzzyParams: u0 support must be >= 0");
}

IntervalParams params_at_alpha(const FuzzyParams& fp, double alpha) {
    return {alpha_cut(fp.nu, alpha), alpha_cut(fp.h, alpha), alpha_cut(fp.u0, alpha)};
}

GridSpec::GridSpec(int nodes_, double dt_, std::vector<double> record_times_)
    : nodes(nodes_), dt(dt_), record_times(std::move(record_times_)) {
    if (nodes < 3) throw validation_error("GridSpec: nodes must be >= 3");
    require_finite(dt, "GridSpec.dt");
    if (!(dt > 0.0)) throw validation_error("GridSpec: dt must be > 0");
    for (std::size_t i = 0; i < record_times.size(); ++i) {
        const double t = record_times[i];
        require_finite(t, "GridSpec.record_times");
        if (t < 0.0) throw validation_error("GridSpec: record time must be >= 0");
        if (i > 0 && !(record_times[i - 1] < t))
            throw validation_error("GridSpec: record times must be strictly increasing");
        if (!is_multiple(t, dt)) {
            std::ostringstream os;
            os << "GridSpec: record time " << t << " is not an integer multiple of dt=" << dt;
            throw validation_error(os.str());
        }
    }
}

long long GridSpec::step_index(double t) const {
    return std::llround(t / dt);
}

long long GridSpec::total_steps() const {
    return record_times.empty() ? 0 : step_index(record_times.back());
}

double diffusion_number(const PhysicalParams& p, const GridSpec& g) {
    const double dy = g.dy_hat();
    return (p.nu / (p.h * p.h)) * (g.dt / (dy * dy));
}

Interval diffusion_number(const IntervalParams& p, const GridSpec& g,
                          ArithmeticMode mode) {
    const double dy = g.dy_hat();
    const Interval c = iv_div(p.nu, iv_mul(p.h, p.h, mode), mode);
    const double scale = g.dt / (dy * dy);
    return iv_mul(c, Interval::degenerate(scale), mode);
}

double resolve_dt(double c_sup, int nodes, const std::vector<double>& record_times,
                  double d_max) {
    if (!(c_sup > 0.0))
        throw validation_error("resolve_dt: sup(nu/h^2) must be > 0");
    if (!(d_max > 0.0 && d_max <= 0.5))
        throw validation_error("resolve_dt: d_max must lie in (0, 0.5]");
    double base = 0.0;
    for (double t : record_times)
        if (t > 0.0) { base = t; break; }
    if (base == 0.0)
        throw validation_error("resolve_dt: need at least one positive record time");
    const double dy = 1.0 / (nodes - 1);
    constexpr int k_max = 10'000'000;
    for (int k = 1; k <= k_max; ++k) {
        const double dt = base / k;
        if (c_sup * dt / (dy * dy) > d_max) continue;
        bool ok = true;
        for (double t : record_times)
            if (!is_multiple(t, dt)) { ok = false; break; }
        if (ok) return dt;
    }
    throw validation_error("resolve_dt: no stable dt divides all record times");
}

}  // namespace plateuq
