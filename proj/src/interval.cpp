#include "plateuq/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace plateuq {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (std::isnan(lo) || std::isnan(hi))
        throw validation_error("Interval: NaN bound");
    if (lo > hi) {
        std::ostringstream os;
        os << "Interval: lo > hi (lo=" << lo << ", hi=" << hi << ")";
        throw validation_error(os.str());
    }
}

bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

Interval iv_add(Interval a, Interval b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

Interval iv_sub(Interval a, Interval b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

Interval iv_mul(Interval a, Interval b, ArithmeticMode mode) {
    if (mode == ArithmeticMode::limit) {
        const double p = a.lo * b.lo;
        const double q = a.hi * b.hi;
        return {std::min(p, q), std::max(p, q)};
    }
    const double p1 = a.lo * b.lo;
    const double p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo;
    const double p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval iv_div(Interval a, Interval b, ArithmeticMode mode) {
    if (b.lo <= 0.0 && 0.0 <= b.hi)
        throw std::domain_error("iv_div: divisor interval contains zero " + to_string(b));
    if (mode == ArithmeticMode::limit) {
        const double p = a.lo / b.hi;
        const double q = a.hi / b.lo;
        return {std::min(p, q), std::max(p, q)};
    }
    const double p1 = a.lo / b.lo;
    const double p2 = a.lo / b.hi;
    const double p3 = a.hi / b.lo;
    const double p4 = a.hi / b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

std::string to_string(const Interval& a) {
    std::ostringstream os;
    os.precision(17);
    os << "[" << a.lo << ", " << a.hi << "]";
    return os.str();
}

}  // namespace plateuq
