// Desk-scale verification suite: every formula is replayed against an
// independent route (brute force, geometry, or a second algebraic form) at
// exact equality. Runnable from the CLI (`extremalkit selftest`) and from the
// acceptance test binary.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace exk::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // first failure, or a short summary of what ran
  double seconds = 0.0;
};

int criterion_count();
std::string criterion_name(int id);  // 1-based

CriterionResult run_criterion(int id);

// Runs the listed criteria (all when empty), invoking on_done after each.
std::vector<CriterionResult> run(const std::vector<int>& only = {},
                                 const std::function<void(const CriterionResult&)>& on_done = {});

}  // namespace exk::selftest
