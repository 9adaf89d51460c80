#pragma once
#include <map>
#include <vector>

#include "plateuq/interval.hpp"

namespace plateuq {

/// Triangular fuzzy number (left, nominal, right) with left <= nominal <= right.
/// left == nominal == right encodes a crisp value.
struct TriangularFuzzyNumber {
    double left;
    double nominal;
    double right;

    TriangularFuzzyNumber(double left_, double nominal_, double right_);

    static TriangularFuzzyNumber crisp(double x) { return {x, x, x}; }
    bool is_crisp() const { return left == right; }
    double spread() const { return right - left; }
};

/// Piecewise-linear membership: 1 at the nominal, 0 outside [left, right].
/// A degenerate ramp (left == nominal or nominal == right) becomes a step
/// with membership 1 exactly at the nominal on that side.
double membership(const TriangularFuzzyNumber& f, double x);

/// Cut at level alpha in [0, 1]:
///   [left + (nominal - left)*alpha, right - (right - nominal)*alpha].
/// Throws validation_error for alpha outside [0, 1].
Interval alpha_cut(const TriangularFuzzyNumber& f, double alpha);

/// Discretization of the membership axis: strictly increasing values in
/// [0, 1] whose last element is 1, so the crisp core is always computed.
struct AlphaLevels {
    std::vector<double> levels;

    explicit AlphaLevels(std::vector<double> levels_);

    /// count equally spaced levels ending at 1 (count == 1 gives {1}).
    static AlphaLevels uniform(int count = 11);

    std::size_t size() const { return levels.size(); }
    double widest() const { return levels.front(); }
};

/// Cut stack of one fuzzy value: level -> nested interval.
struct FuzzyScalar {
    std::map<double, Interval> cuts;
};

FuzzyScalar fuzzify(const TriangularFuzzyNumber& f, const AlphaLevels& levels);

}  // namespace plateuq
