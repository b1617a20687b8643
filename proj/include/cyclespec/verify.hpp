#pragma once

#include <string>
#include <vector>

#include "cyclespec/numeric.hpp"

namespace cyclespec {

enum class Suite { acceptance, invariants, all };
const char* to_string(Suite suite);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);

struct CheckResult {
  std::string id;    // "1".."11" for acceptance criteria, a slug for invariants
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 11;

/// Acceptance criterion 1..11 with its pinned tolerances. max_m <= 0 keeps the stated ranges;
/// a positive value caps every modulus range.
CheckResult run_criterion(int id, long max_m = 0);

/// Cross-module invariants (property checks over deterministic parameter grids).
std::vector<CheckResult> run_invariants(long max_m = 0);

struct VerifyReport {
  Suite suite = Suite::all;
  long max_m = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

VerifyReport run_suite(Suite suite, long max_m = 0);

}  // namespace cyclespec
