#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracmat::verify {

/// One acceptance criterion, its pass/fail state, and the measured values
/// behind the verdict.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

/// Run a single criterion (1..10).
CriterionResult run_criterion(int id);

/// Criterion ids belonging to a named suite:
/// coeffs {7}, operators {6, 8, 10}, oracle {3}, examples {1, 2, 4, 5, 9},
/// all {1..10}.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_suite(const std::string& suite);

/// Print one pass/fail line per criterion; returns the number of failures.
int print_report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace fracmat::verify
