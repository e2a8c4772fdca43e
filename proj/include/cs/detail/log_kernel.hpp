#pragma once

// Internals shared by the log-space weight kernels.

#include <cmath>
#include <limits>
#include <vector>

#include "cs/factorials.hpp"
#include "cs/stable_sum.hpp"

namespace cs::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// integer power by squaring; 0^0 = 1
inline double ipow(double base, int e) {
  double r = 1.0;
  double b = base;
  for (int m = e; m > 0; m >>= 1) {
    if (m & 1) r *= b;
    b *= b;
  }
  return r;
}

struct Split {
  double hi = 0.0;
  double lo = 0.0;
};

inline Split two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - bb) + (b - (s - bb))};
}

// m * logv with the product's rounding error retained
inline Split scaled(int m, double logv) {
  const double p = static_cast<double>(m) * logv;
  return {p, std::fma(static_cast<double>(m), logv, -p)};
}

// log of u (u + k beta)^(k-1) for fixed (u, beta), tabulated over k = 0..n.
// hi == -inf marks an exactly-zero factor (u = 0, k >= 1); the k = 0 entry
// is log 1 = 0 by the boundary convention. The k = 1 entry carries no power
// term at all, which settles the 0^0 corner at u = beta = 0.
class LogAbelTable {
 public:
  LogAbelTable(double u, double beta, int n) : e_(static_cast<std::size_t>(n) + 1) {
    if (n < 1) return;
    if (u == 0.0) {
      for (int k = 1; k <= n; ++k) e_[k] = {kNegInf, 0.0};
      return;
    }
    const double lu = std::log(u);
    e_[1] = {lu, 0.0};
    for (int k = 2; k <= n; ++k) {
      const Split p = scaled(k - 1, std::log(u + k * beta));
      const Split s = two_sum(lu, p.hi);
      e_[k] = {s.hi, s.lo + p.lo};
    }
  }

  const Split& at(int k) const { return e_[static_cast<std::size_t>(k)]; }
  bool zero(int k) const { return std::isinf(e_[static_cast<std::size_t>(k)].hi); }

 private:
  std::vector<Split> e_;
};

// Compensated accumulator for split log terms.
struct LogSum {
  StableSum acc;

  void add(const Split& s) {
    acc += s.hi;
    acc += s.lo;
  }
  void add_fact(const LogFactorialView& v, int k) {
    acc += v.hi[k];
    acc += v.lo[k];
  }
  void sub_fact(const LogFactorialView& v, int k) {
    acc += -v.hi[k];
    acc += -v.lo[k];
  }
  double value() const { return acc.value(); }
};

}  // namespace cs::detail
