#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace satake {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample on failure
  double seconds = 0.0;
};

struct VerifyOptions {
  std::string only;      // substring filter on criterion names; empty = all
  uint64_t seed = 12345;
  bool inject_fault = false;  // negative control: flips one expected value
};

/// Root systems exercised by the acceptance checks.
const std::vector<std::string>& sweep_labels();

/// Runs the ten acceptance criteria (or the filtered subset) and returns one
/// result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);

}  // namespace satake
