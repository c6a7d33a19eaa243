#pragma once

#include <string>
#include <vector>

#include "instanton/model.hpp"

namespace instanton {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// The full formula-anchor and property suite in reduced units
/// (M = omega = delta = hbar = 1). Each entry prints as one pass/fail line.
std::vector<CheckResult> run_acceptance_checks();

} // namespace instanton
