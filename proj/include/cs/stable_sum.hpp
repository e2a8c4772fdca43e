#pragma once

#include <cmath>

namespace cs {

// Neumaier-compensated accumulator: tracks the rounding error of every
// addition and folds it back in when the total is read. Used wherever a
// weight sum has to hold a 1e-12 partition tolerance.
struct StableSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  StableSum& operator+=(double value) {
    add(value);
    return *this;
  }

  double value() const { return sum + compensation; }
};

}  // namespace cs
