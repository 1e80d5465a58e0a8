#pragma once

#include <string>
#include <vector>

namespace sqjc {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  bool full = false;      // complete grids; quick mode runs reduced ones
  unsigned seed = 20240403;
  // Test hook: flips the sign of the coupling term in one closed form so
  // the mutation-detection contract of identity chain I can be exercised.
  bool perturb_chain_one = false;
};

// Runs every invariant suite and returns one result per suite.
std::vector<SuiteResult> run_validation(const ValidateOptions& options);

}  // namespace sqjc
