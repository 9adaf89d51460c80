#pragma once
#include <vector>

#include "plateuq/fields.hpp"
#include "plateuq/grid.hpp"

namespace plateuq {

/// How interval states are advanced one step.
///
///   naive    — the stencil u_j + d*(u_{j+1} - 2 u_j + u_{j-1}) evaluated
///              literally with interval arithmetic. u_j enters twice, so
///              widths inflate every step (the dependency problem); kept as
///              a diagnostic of that effect.
///   monotone — per-step endpoint evaluation of the equivalent regrouping
///              (1-2d) u_j + d (u_{j+1} + u_{j-1}). All coefficients are
///              nonnegative when d.hi <= 1/2, so the exact step image is
///              attained at box vertices: lower bound from the lower state
///              and the minimizing d endpoint, upper symmetrically. Tight,
///              and still encloses every crisp parameter selection.
enum class PropagationMode { naive, monotone };

struct SolveOptions {
    PropagationMode propagation = PropagationMode::monotone;
    ArithmeticMode arithmetic = ArithmeticMode::limit;
    bool parallel = false;
};

/// One interval update including boundary reset (wall keeps u.front(),
/// far wall reset to [0,0]). Monotone mode is refused when d.hi > 1/2.
std::vector<Interval> step_interval(const std::vector<Interval>& u, Interval d,
                                    const SolveOptions& opts = {});

/// Interval march from the interval initial condition (wall node = u0
/// interval, zero elsewhere). Throws instability_error when d.hi > 1/2.
IntervalField solve_interval(const IntervalParams& p, const GridSpec& g,
                             const SolveOptions& opts = {});

/// Solves one interval problem per alpha level. Distinct levels may run
/// concurrently; results are deterministic regardless of schedule.
/// Reports every unstable level (and its d.hi) before solving anything.
FuzzyField solve_fuzzy(const FuzzyParams& fp, const GridSpec& g,
                       const AlphaLevels& levels, const SolveOptions& opts = {});

}  // namespace plateuq
