#pragma once
#include <vector>

#include "plateuq/interval.hpp"

namespace plateuq {

/// Nodal velocities at each recorded time. times and u are aligned.
struct CrispField {
    std::vector<double> times;
    std::vector<std::vector<double>> u;

    const std::vector<double>& at(double t) const;
};

/// Nodal velocity bounds at each recorded time.
struct IntervalField {
    std::vector<double> times;
    std::vector<std::vector<Interval>> u;

    const std::vector<Interval>& at(double t) const;
};

/// One IntervalField per alpha level. levels and per_alpha are aligned,
/// levels ascending with the crisp core (alpha = 1) last.
struct FuzzyField {
    std::vector<double> levels;
    std::vector<IntervalField> per_alpha;

    const IntervalField& at_level(double alpha) const;
    const IntervalField& core() const { return per_alpha.back(); }
    const IntervalField& support() const { return per_alpha.front(); }
};

}  // namespace plateuq
