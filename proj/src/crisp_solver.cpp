#include "plateuq/crisp_solver.hpp"

#include <sstream>
#include <utility>

namespace plateuq {

namespace {

// Below this size thread startup costs more than the loop.
constexpr std::size_t kParallelNodeThreshold = 4096;

}  // namespace

void ftcs_step(std::span<const double> in, std::span<double> out, double d) {
    const std::size_t n = in.size();
    for (std::size_t j = 1; j + 1 < n; ++j)
        out[j] = in[j] + d * (in[j + 1] - 2.0 * in[j] + in[j - 1]);
}

void ftcs_step_omp(std::span<const double> in, std::span<double> out, double d) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t j = 1; j < n - 1; ++j)
        out[j] = in[j] + d * (in[j + 1] - 2.0 * in[j] + in[j - 1]);
}

std::vector<double> step_crisp(const std::vector<double>& u, double d) {
    if (u.size() < 3)
        throw validation_error("step_crisp: need at least 3 nodes");
    std::vector<double> out(u.size());
    ftcs_step(u, out, d);
    out.front() = u.front();
    out.back() = 0.0;
    return out;
}

CrispField solve_crisp(const PhysicalParams& p, const GridSpec& g,
                       const CrispSolveOptions& opts) {
    const double d = diffusion_number(p, g);
    if (!opts.allow_unstable && d > 0.5) {
        std::ostringstream os;
        os << "solve_crisp: diffusion number d=" << d
           << " exceeds the stability bound 0.5 (dt=" << g.dt << ")";
        throw instability_error(os.str());
    }

    const std::size_t n = static_cast<std::size_t>(g.nodes);
    const bool use_omp = opts.parallel && n >= kParallelNodeThreshold;

    std::vector<double> cur(n, 0.0), next(n, 0.0);
    cur[0] = p.u0;

    CrispField out;
    out.times = g.record_times;
    out.u.resize(out.times.size());

    std::size_t rec = 0;
    auto record_if_due = [&](long long step) {
        while (rec < out.times.size() && g.step_index(out.times[rec]) == step)
            out.u[rec++] = cur;
    };
    record_if_due(0);

    const long long last = g.total_steps();
    for (long long k = 1; k <= last; ++k) {
        if (use_omp)
            ftcs_step_omp(cur, next, d);
        else
            ftcs_step(cur, next, d);
        next.front() = p.u0;
        next.back() = 0.0;
        std::swap(cur, next);
        record_if_due(k);
    }
    return out;
}

}  // namespace plateuq
