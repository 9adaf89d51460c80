#include "plateuq/fuzzy.hpp"

#include <cmath>
#include <sstream>

namespace plateuq {

TriangularFuzzyNumber::TriangularFuzzyNumber(double left_, double nominal_, double right_)
    : left(left_), nominal(nominal_), right(right_) {
    if (std::isnan(left) || std::isnan(nominal) || std::isnan(right))
        throw validation_error("TriangularFuzzyNumber: NaN component");
    if (!(left <= nominal && nominal <= right)) {
        std::ostringstream os;
        os << "TriangularFuzzyNumber: requires left <= nominal <= right, got ("
           << left << ", " << nominal << ", " << right << ")";
        throw validation_error(os.str());
    }
}

double membership(const TriangularFuzzyNumber& f, double x) {
    if (x == f.nominal) return 1.0;
    if (x <= f.left || x >= f.right) return 0.0;
    if (x < f.nominal) return (x - f.left) / (f.nominal - f.left);
    return (f.right - x) / (f.right - f.nominal);
}

Interval alpha_cut(const TriangularFuzzyNumber& f, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << "alpha_cut: alpha must lie in [0, 1], got " << alpha;
        throw validation_error(os.str());
    }
    return {f.left + (f.nominal - f.left) * alpha,
            f.right - (f.right - f.nominal) * alpha};
}

AlphaLevels::AlphaLevels(std::vector<double> levels_) : levels(std::move(levels_)) {
    if (levels.empty())
        throw validation_error("AlphaLevels: empty");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] >= 0.0 && levels[i] <= 1.0))
            throw validation_error("AlphaLevels: level outside [0, 1]");
        if (i > 0 && !(levels[i - 1] < levels[i]))
            throw validation_error("AlphaLevels: levels must be strictly increasing");
    }
    if (levels.back() != 1.0)
        throw validation_error("AlphaLevels: last level must be 1 (crisp core)");
}

AlphaLevels AlphaLevels::uniform(int count) {
    if (count < 1)
        throw validation_error("AlphaLevels::uniform: count must be >= 1");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        v.push_back(1.0);
    } else {
        for (int k = 0; k < count; ++k)
            v.push_back(static_cast<double>(k) / (count - 1));
    }
    return AlphaLevels(std::move(v));
}

FuzzyScalar fuzzify(const TriangularFuzzyNumber& f, const AlphaLevels& levels) {
    FuzzyScalar out;
    for (double a : levels.levels)
        out.cuts.emplace(a, alpha_cut(f, a));
    return out;
}

}  // namespace plateuq
