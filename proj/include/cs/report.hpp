#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cs {

struct Violation {
  std::string input;
  double residual = 0.0;
};

// Outcome of a verification scan. passed holds exactly when the violation
// list is empty at the stated tolerance, and a rerun with the same seed
// reproduces the serialized report byte for byte.
struct VerificationReport {
  std::string check;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool passed = false;
  std::vector<Violation> violations;  // trial order

  // {"check":..,"trials":..,"seed":..,"tolerance":..,"max_residual":..,
  //  "passed":..,"violations":[{"input":..,"residual":..},...]}
  std::string to_json() const;
};

}  // namespace cs
