// Reference-value suite: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "oddab/acceptance.hpp"

int main() {
  unsigned jobs = 2;
  if (const char* e = std::getenv("ODDAB_JOBS")) {
    int v = std::atoi(e);
    if (v > 0) jobs = unsigned(v);
  }
  auto results = oddab::acceptance::run_all(jobs);
  std::cout << oddab::acceptance::format_results(results);
  bool ok = oddab::acceptance::all_passed(results);
  std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
