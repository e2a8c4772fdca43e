#include "cs/factorials.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cs/stable_sum.hpp"

namespace cs {
namespace {

struct LogFactTable {
  std::vector<double> hi;
  std::vector<double> lo;

  LogFactTable() : hi(kLogFactorialCacheSize), lo(kLogFactorialCacheSize) {
    StableSum acc;
    for (int k = 1; k < kLogFactorialCacheSize; ++k) {
      acc += std::log(static_cast<double>(k));
      hi[k] = acc.sum;
      lo[k] = acc.compensation;
    }
  }
};

// Built once on first use (thread-safe static init), read-only afterwards.
const LogFactTable& table() {
  static const LogFactTable t;
  return t;
}

void check_fact_arg(int k) {
  if (k < 0 || k >= kLogFactorialCacheSize) {
    throw std::domain_error("log-factorial argument outside cache range 0..4096");
  }
}

constexpr int kPascalMax = 64;

struct PascalTable {
  std::vector<double> c;

  PascalTable() : c(static_cast<std::size_t>(kPascalMax + 1) * (kPascalMax + 2) / 2) {
    c[0] = 1.0;
    for (int n = 1; n <= kPascalMax; ++n) {
      double* row = &c[static_cast<std::size_t>(n) * (n + 1) / 2];
      const double* prev = &c[static_cast<std::size_t>(n - 1) * n / 2];
      row[0] = 1.0;
      row[n] = 1.0;
      for (int k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable t;
  return t;
}

}  // namespace

double log_factorial(int k) {
  check_fact_arg(k);
  const auto& t = table();
  return t.hi[k] + t.lo[k];
}

SplitReal log_factorial_split(int k) {
  check_fact_arg(k);
  const auto& t = table();
  return {t.hi[k], t.lo[k]};
}

LogFactorialView log_factorial_view() {
  const auto& t = table();
  return {t.hi.data(), t.lo.data(), kLogFactorialCacheSize};
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial needs 0 <= k <= n");
  check_fact_arg(n);
  const auto& t = table();
  return (t.hi[n] - t.hi[k] - t.hi[n - k]) + (t.lo[n] - t.lo[k] - t.lo[n - k]);
}

double log_multinomial(int n, int k1, int k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 > n) {
    throw std::domain_error("log_multinomial needs k1, k2 >= 0 and k1 + k2 <= n");
  }
  check_fact_arg(n);
  const auto& t = table();
  const int r = n - k1 - k2;
  return (t.hi[n] - t.hi[k1] - t.hi[k2] - t.hi[r]) +
         (t.lo[n] - t.lo[k1] - t.lo[k2] - t.lo[r]);
}

double binomial_exact(int n, int k) {
  if (n < 0 || n > kPascalMax || k < 0 || k > n) {
    throw std::domain_error("binomial_exact supports 0 <= k <= n <= 64");
  }
  return pascal().c[static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(k)];
}

double multinomial_exact(int n, int k1, int k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 > n) {
    throw std::domain_error("multinomial_exact needs k1, k2 >= 0 and k1 + k2 <= n");
  }
  return binomial_exact(n, k1) * binomial_exact(n - k1, k2);
}

}  // namespace cs
