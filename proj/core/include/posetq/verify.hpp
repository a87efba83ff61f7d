#pragma once

#include <posetq/generators.hpp>

#include <string>
#include <vector>

namespace posetq {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail; // first violation, empty when passed
  double seconds = 0;
};

/// Names of the invariants run_verification checks, in report order.
std::vector<std::string> verification_check_names();

/// Runs every invariant against the model, one task per check. Checks that
/// need chains skip chain pairs they do not apply to.
std::vector<CheckResult> run_verification(const Model &model);

} // namespace posetq
