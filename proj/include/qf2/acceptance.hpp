#pragma once

#include <string>
#include <vector>

namespace qf2 {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    /// Offending cases, empty on success.
    std::vector<std::string> failures;
    /// Number of individual exact comparisons made.
    int checks = 0;
};

/// Acceptance criteria 1-10, each an exact comparison.
std::vector<CriterionResult> run_acceptance();

/// "PASS [n] title (k checks)" or "FAIL [n] title: first failures".
std::string format_result(const CriterionResult& r);

}  // namespace qf2
