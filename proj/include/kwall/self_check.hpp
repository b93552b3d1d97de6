#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kwall {

struct CheckResult {
  std::string family;
  int trials = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Randomized invariant suites for every module, plus the bundled wall
// families which run regardless of the trial count.  Fixed seed gives a
// reproducible run.
std::vector<CheckResult> run_self_check(int trials, std::uint64_t seed);

}  // namespace kwall
