#pragma once
#include <string>

#include "plateuq/errors.hpp"

namespace plateuq {

/// Closed real interval [lo, hi]; the unit of all uncertain arithmetic.
/// lo <= hi is enforced at construction (NaN bounds are rejected).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    static Interval degenerate(double x) { return Interval(x, x); }

    bool is_degenerate() const { return lo == hi; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x, double slack = 0.0) const {
        return lo - slack <= x && x <= hi + slack;
    }
    bool contains(const Interval& inner, double slack = 0.0) const {
        return lo - slack <= inner.lo && inner.hi <= hi + slack;
    }
};

bool operator==(const Interval& a, const Interval& b);

/// Multiplication and division come in two flavours:
///   limit    — bounds from the endpoint pairs (lo op lo, hi op hi for mul;
///              lo/hi, hi/lo for div). Coincides with standard arithmetic
///              whenever both operands are nonnegative, but is NOT an
///              enclosure for mixed-sign operands.
///   standard — min/max over all four endpoint combinations; inclusion
///              isotone, always an enclosure.
enum class ArithmeticMode { limit, standard };

Interval iv_add(Interval a, Interval b);
Interval iv_sub(Interval a, Interval b);
Interval iv_mul(Interval a, Interval b, ArithmeticMode mode = ArithmeticMode::limit);
/// Throws std::domain_error when the divisor interval contains zero.
Interval iv_div(Interval a, Interval b, ArithmeticMode mode = ArithmeticMode::limit);

inline double width(Interval a) { return a.hi - a.lo; }

std::string to_string(const Interval& a);

}  // namespace plateuq
