// Acceptance battery entry point: runs every criterion, prints one pass/fail
// line each, exits nonzero when any criterion fails.

#include <iostream>

#include "schurmzf/suite.hpp"

int main() {
    auto results = schurmzf::run_acceptance_suite(/*threads=*/2);
    int failed = schurmzf::print_suite_results(results, std::cout);
    return failed == 0 ? 0 : 1;
}
