#pragma once

#include <string>
#include <vector>

namespace cdpoly {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Replays the hand-worked examples (sedenion zero divisors, the quaternion
/// cubic, split-quaternion factors, slice geometry, ...) through the public
/// API.  Exact arithmetic wherever the check is algebraic.
std::vector<CheckResult> run_worked_examples();

}  // namespace cdpoly
