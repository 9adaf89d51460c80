#include "plateuq/fields.hpp"

#include <sstream>

#include "plateuq/errors.hpp"

namespace plateuq {

namespace {

template <typename Field>
std::size_t time_slot(const Field& f, double t) {
    for (std::size_t i = 0; i < f.times.size(); ++i)
        if (f.times[i] == t) return i;
    std::ostringstream os;
    os << "field: time " << t << " was not recorded";
    throw validation_error(os.str());
}

}  // namespace

const std::vector<double>& CrispField::at(double t) const {
    return u[time_slot(*this, t)];
}

const std::vector<Interval>& IntervalField::at(double t) const {
    return u[time_slot(*this, t)];
}

const IntervalField& FuzzyField::at_level(double alpha) const {
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i] == alpha) return per_alpha[i];
    std::ostringstream os;
    os << "FuzzyField: no cut at alpha=" << alpha;
    throw validation_error(os.str());
}

}  // namespace plateuq
