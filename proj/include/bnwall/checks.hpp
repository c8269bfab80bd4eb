#pragma once

// Named end-to-end checks over the library.  Each criterion runs over its full
// range of n with a wall-clock budget; `verify_for` runs the ones that apply
// to a single n.

#include <string>
#include <vector>

namespace bnwall::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

CheckResult string_class_count(int n);
CheckResult indecomposable_count(int n);
CheckResult no_bands(int n);
CheckResult golden_cones_n1();
CheckResult golden_cones_n2();
CheckResult oracle_matches_closed_form(int n);
CheckResult nonthin_spaces(int n);
CheckResult thin_reduction(int n);
CheckResult sub_quot_symmetry(int n);
CheckResult chambers_n1();
CheckResult property_suite(int n);

/// Criterion `id` (1..11) over its whole range, with its time budget enforced.
CheckResult criterion(int id);
constexpr int kCriterionCount = 11;

/// Every check applicable to this n.  Stops after the first failure when
/// `fail_fast` is set.
std::vector<CheckResult> verify_for(int n, bool fail_fast = true);

}  // namespace bnwall::checks
