#pragma once
#include <span>
#include <vector>

#include "plateuq/fields.hpp"
#include "plateuq/grid.hpp"

namespace plateuq {

/// Interior stencil update out[j] = in[j] + d*(in[j+1] - 2 in[j] + in[j-1]).
/// Serial reference kernel; boundaries are untouched.
void ftcs_step(std::span<const double> in, std::span<double> out, double d);

/// OpenMP variant; bitwise-identical results to ftcs_step.
void ftcs_step_omp(std::span<const double> in, std::span<double> out, double d);

/// One full update: interior stencil plus boundary reset (wall node keeps
/// u.front(), far wall reset to 0).
std::vector<double> step_crisp(const std::vector<double>& u, double d);

struct CrispSolveOptions {
    bool allow_unstable = false;  // permit d > 1/2 (error-growth probes)
    bool parallel = false;        // use the OpenMP kernel for large grids
};

/// Marches from the impulsive-start initial condition (wall node at u0,
/// zero elsewhere) and records the requested times.
/// Throws instability_error when d > 1/2 unless allow_unstable is set.
CrispField solve_crisp(const PhysicalParams& p, const GridSpec& g,
                       const CrispSolveOptions& opts = {});

}  // namespace plateuq
