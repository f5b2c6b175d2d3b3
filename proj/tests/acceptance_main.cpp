// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failures
// (clamped to 1).

#include "fracmat/verify.hpp"

#include <iostream>

int main() {
    const auto results = fracmat::verify::run_suite("all");
    const int failures = fracmat::verify::print_report(results, std::cout);
    std::cout << "----\n"
              << (results.size() - failures) << "/" << results.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
