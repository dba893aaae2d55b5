#pragma once

#include <string>
#include <vector>

namespace arbor {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Recomputes the worked examples on the reference graphs and compares them
/// with their published values entry by entry.
std::vector<CheckResult> reproduce_examples();

}  // namespace arbor
