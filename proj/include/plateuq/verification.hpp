#pragma once
#include <string>
#include <vector>

#include "plateuq/run_config.hpp"

namespace plateuq {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationOptions {
    double series_tol_frac = 0.01;     // fraction of u0
    double collapse_rel_tol = 1e-12;
    double containment_slack = 1e-9;   // absolute, velocity units
    int series_terms = 200;
};

/// The oracle suite behind the `verify` subcommand:
///  - crisp solve vs the closed-form series at every node and record time,
///  - vertex envelope contained in the interval field for all seven fuzzy
///    combinations at alpha in {0, 0.5},
///  - fuzzy solve at alpha = 1 collapsing to the crisp solve.
std::vector<CheckResult> run_verification(const RunConfig& cfg,
                                          const VerificationOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace plateuq
