#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreathlab {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // counts checked / first failure
};

/// Runs the full acceptance suite (8 criteria), printing one pass/fail line
/// per criterion to `out`; returns true iff all pass.
bool run_acceptance_suite(std::ostream& out);

std::vector<CriterionResult> acceptance_criteria();

/// Canonical list of abelian groups of a given order (one per isomorphism
/// class), built as direct sums of primary cyclic factors.
std::vector<std::vector<int>> abelian_factor_lists(int order);

}  // namespace wreathlab
