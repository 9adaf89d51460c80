#pragma once
#include <vector>

#include "plateuq/grid.hpp"

namespace plateuq {

/// Closed-form separation-of-variables solution of the moving-wall
/// diffusion problem on the normalized domain:
///   u(y_hat, t) = u0 [ (1 - y_hat)
///                      - sum_n (2/(n pi)) sin(n pi y_hat) e^{-n^2 pi^2 nu t / h^2} ].
/// Independent of the finite-difference path; used as the accuracy oracle.
double series_velocity(const PhysicalParams& p, double y_hat, double t,
                       int terms = 200);

/// The profile on a uniform grid of `nodes` points over y_hat in [0, 1].
std::vector<double> series_profile(const PhysicalParams& p, int nodes, double t,
                                   int terms = 200);

}  // namespace plateuq
