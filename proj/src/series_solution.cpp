#include "plateuq/series_solution.hpp"

#include <cmath>
#include <numbers>

namespace plateuq {

double series_velocity(const PhysicalParams& p, double y_hat, double t, int terms) {
    if (y_hat <= 0.0) return p.u0;
    if (y_hat >= 1.0) return 0.0;
    if (t <= 0.0) return 0.0;
    constexpr double pi = std::numbers::pi;
    const double tau = p.nu * t / (p.h * p.h);
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        const double decay = std::exp(-double(n) * n * pi * pi * tau);
        if (decay == 0.0) break;  // later terms only shrink
        sum += (2.0 / (n * pi)) * std::sin(n * pi * y_hat) * decay;
    }
    return p.u0 * ((1.0 - y_hat) - sum);
}

std::vector<double> series_profile(const PhysicalParams& p, int nodes, double t,
                                   int terms) {
    std::vector<double> out(static_cast<std::size_t>(nodes));
    const double dy = 1.0 / (nodes - 1);
    for (int j = 0; j < nodes; ++j)
        out[static_cast<std::size_t>(j)] = series_velocity(p, j * dy, t, terms);
    return out;
}

}  // namespace plateuq
