#pragma once

namespace cs {

// log k! is cached for k = 0..4096. The table is built on first use behind a
// publish-once guard and is read-only afterwards.
inline constexpr int kLogFactorialCacheSize = 4097;

struct SplitReal {
  double hi = 0.0;
  double lo = 0.0;
};

double log_factorial(int k);

// Split form (value = hi + lo) kept from the compensated construction; the
// weight kernels feed both halves into their own compensated sums.
SplitReal log_factorial_split(int k);

// Raw view of the whole cache for hot loops.
struct LogFactorialView {
  const double* hi;
  const double* lo;
  int size;
};
LogFactorialView log_factorial_view();

double log_binomial(int n, int k);

// log of n! / (k1! k2! (n-k1-k2)!)
double log_multinomial(int n, int k1, int k2);

// Pascal-table binomial in double precision, n <= 64 (exact while the
// entries stay below 2^53, i.e. through n = 56).
double binomial_exact(int n, int k);

// n! / (k1! k2! (n-k1-k2)!) via two Pascal lookups.
double multinomial_exact(int n, int k1, int k2);

}  // namespace cs
