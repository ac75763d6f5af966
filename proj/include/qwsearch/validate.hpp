#pragma once

#include <string>
#include <vector>

namespace qws::cli {

struct CheckResult {
  std::string name;
  bool hard = true;   // hard checks gate the exit code; soft ones only report
  bool pass = false;
  double measured = 0.0;   // the extremal deviation (or overlap defect)
  double threshold = 0.0;  // what it was compared against
  std::string detail;
};

struct ValidateOptions {
  // Reduced grid for smoke runs; the full grid is the default.
  bool quick = false;
  // Threshold for the soft closed-vs-brute pairwise-concurrence comparison.
  double pairwise_tolerance = 1e-8;
  // Bound for the soft asymptotic complementarity check.
  double asymptotic_bound = 0.02;
  // Test fixture: drop the oracle from the step operator so the
  // closed-vs-full check must fail.
  bool inject_no_oracle = false;
};

std::vector<CheckResult> run_validation(const ValidateOptions& opts);

bool all_hard_checks_pass(const std::vector<CheckResult>& results);

std::string render_text(const std::vector<CheckResult>& results);
std::string render_json(const std::vector<CheckResult>& results);

}  // namespace qws::cli
