#pragma once

#include <string>
#include <vector>

namespace oddab::acceptance {

struct CriterionResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs every reference-value criterion; `jobs` bounds worker threads for the
/// sampling checks.
std::vector<CriterionResult> run_all(unsigned jobs = 1);

/// One line per criterion, "PASS"/"FAIL" first.
std::string format_results(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace oddab::acceptance
