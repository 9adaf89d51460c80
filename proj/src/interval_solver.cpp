#include "plateuq/interval_solver.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <utility>

namespace plateuq {

namespace {

constexpr std::size_t kParallelNodeThreshold = 4096;

// Literal interval evaluation of the stencil; u_j appears twice, so widths
// inflate step over step.
inline Interval naive_node(const std::vector<Interval>& u, std::size_t j,
                           Interval d, ArithmeticMode m) {
    static const Interval two{2.0, 2.0};
    const Interval second_diff =
        iv_add(iv_sub(u[j + 1], iv_mul(two, u[j], m)), u[j - 1]);
    return iv_add(u[j], iv_mul(d, second_diff, m));
}

// Exact step image over the (d-endpoints x state-box) vertices. Valid while
// the regrouped coefficients (1-2d) and d stay nonnegative, i.e. d.hi <= 1/2:
// the minimum over the state box is then attained at the lower bounds, and
// the step is linear in d, so its endpoints finish the job. The expression
// is kept in the same form as the crisp kernel so degenerate inputs collapse
// bit-exactly.
inline Interval monotone_node(const std::vector<Interval>& u, std::size_t j,
                              Interval d) {
    const double s_lo = u[j + 1].lo - 2.0 * u[j].lo + u[j - 1].lo;
    const double s_hi = u[j + 1].hi - 2.0 * u[j].hi + u[j - 1].hi;
    const double lo = u[j].lo + std::min(d.lo * s_lo, d.hi * s_lo);
    const double hi = u[j].hi + std::max(d.lo * s_hi, d.hi * s_hi);
    return {lo, hi};
}

void step_interior(const std::vector<Interval>& cur, std::vector<Interval>& next,
                   Interval d, const SolveOptions& opts, bool use_omp) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cur.size());
    if (opts.propagation == PropagationMode::monotone) {
        if (use_omp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::ptrdiff_t j = 1; j < n - 1; ++j)
                next[j] = monotone_node(cur, static_cast<std::size_t>(j), d);
        } else {
            for (std::ptrdiff_t j = 1; j < n - 1; ++j)
                next[j] = monotone_node(cur, static_cast<std::size_t>(j), d);
        }
    } else {
        if (use_omp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::ptrdiff_t j = 1; j < n - 1; ++j)
                next[j] = naive_node(cur, static_cast<std::size_t>(j), d, opts.arithmetic);
        } else {
            for (std::ptrdiff_t j = 1; j < n - 1; ++j)
                next[j] = naive_node(cur, static_cast<std::size_t>(j), d, opts.arithmetic);
        }
    }
}

void check_step_preconditions(Interval d, const SolveOptions& opts) {
    if (!(d.lo >= 0.0))
        throw validation_error("step_interval: d.lo must be >= 0");
    if (opts.propagation == PropagationMode::monotone && d.hi > 0.5) {
        std::ostringstream os;
        os << "step_interval: monotone mode requires d.hi <= 0.5, got d.hi=" << d.hi;
        throw instability_error(os.str());
    }
}

}  // namespace

std::vector<Interval> step_interval(const std::vector<Interval>& u, Interval d,
                                    const SolveOptions& opts) {
    if (u.size() < 3)
        throw validation_error("step_interval: need at least 3 nodes");
    check_step_preconditions(d, opts);
    std::vector<Interval> next(u.size());
    step_interior(u, next, d, opts, false);
    next.front() = u.front();
    next.back() = Interval{0.0, 0.0};
    return next;
}

IntervalField solve_interval(const IntervalParams& p, const GridSpec& g,
                             const SolveOptions& opts) {
    const Interval d = diffusion_number(p, g, opts.arithmetic);
    if (d.hi > 0.5) {
        std::ostringstream os;
        os << "solve_interval: diffusion number sup d=" << d.hi
           << " exceeds the stability bound 0.5 (dt=" << g.dt << ")";
        throw instability_error(os.str());
    }
    check_step_preconditions(d, opts);

    const std::size_t n = static_cast<std::size_t>(g.nodes);
    const bool use_omp = opts.parallel && n >= kParallelNodeThreshold;

    std::vector<Interval> cur(n, Interval{0.0, 0.0}), next(n);
    cur[0] = p.u0;

    IntervalField out;
    out.times = g.record_times;
    out.u.resize(out.times.size());

    std::size_t rec = 0;
    auto record_if_due = [&](long long step) {
        while (rec < out.times.size() && g.step_index(out.times[rec]) == step)
            out.u[rec++] = cur;
    };
    record_if_due(0);

    const long long last = g.total_steps();
    for (long long k = 1; k <= last; ++k) {
        step_interior(cur, next, d, opts, use_omp);
        next.front() = p.u0;
        next.back() = Interval{0.0, 0.0};
        std::swap(cur, next);
        record_if_due(k);
    }
    return out;
}

FuzzyField solve_fuzzy(const FuzzyParams& fp, const GridSpec& g,
                       const AlphaLevels& levels, const SolveOptions& opts) {
    const std::size_t m = levels.size();
    std::vector<IntervalParams> per;
    per.reserve(m);
    std::ostringstream unstable;
    bool any_unstable = false;
    for (double a : levels.levels) {
        per.push_back(params_at_alpha(fp, a));
        const Interval d = diffusion_number(per.back(), g, opts.arithmetic);
        if (d.hi > 0.5) {
            unstable << (any_unstable ? "; " : "") << "alpha=" << a
                     << " has sup d=" << d.hi;
            any_unstable = true;
        }
    }
    if (any_unstable) {
        throw instability_error("solve_fuzzy: unstable levels (bound 0.5, dt=" +
                                std::to_string(g.dt) + "): " + unstable.str());
    }

    FuzzyField out;
    out.levels = levels.levels;
    out.per_alpha.resize(m);

    std::vector<std::exception_ptr> errors(m);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            out.per_alpha[i] = solve_interval(per[i], g, opts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace plateuq
