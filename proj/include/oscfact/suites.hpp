#pragma once

#include <string>
#include <vector>

namespace oscfact {

/// One invariant check: measured value against its bound. For truth-valued
/// checks measured is 0 or 1 with bound 1.
struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string note;
};

std::vector<CheckResult> run_factorize_suite();
std::vector<CheckResult> run_families_suite();
std::vector<CheckResult> run_verify_suite();

/// suite is one of "all", "factorize", "families", "verify".
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace oscfact
