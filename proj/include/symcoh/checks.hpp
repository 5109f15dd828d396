#pragma once

#include <string>
#include <vector>

#include "symcoh/sympair.hpp"

namespace symcoh {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // counts on success, first counterexample on failure
};

const std::vector<std::string>& check_suite_names();

/// Runs one named cross-validation suite (conics-euler, sp-equality, table1,
/// h1-vanishing, p2-plethysm, charring-agreement).  Throws
/// std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_check_suite(const std::string& suite);

/// The full acceptance battery, one result per criterion, at the pinned grids
/// and tolerances.
std::vector<CheckResult> run_acceptance();

}  // namespace symcoh
