#pragma once

#include <string>
#include <vector>

#include "cs/core.hpp"

namespace cs {

// Evaluation path for the basis weights. The direct product form is cheaper
// at small degree; the log-space form (log-binomials from the cached
// log-factorials, log Abel factors, one exponentiation per entry) survives
// any (n, beta) without overflow. kAuto switches to log space when
// n > kDirectPathMaxDegree or n * beta > kDirectPathMaxNBeta.
enum class WeightPath { kAuto, kDirect, kLogSpace };

inline constexpr int kDirectPathMaxDegree = 20;
inline constexpr double kDirectPathMaxNBeta = 5.0;
// Explicit kDirect requests are honoured while the Pascal table stays exact.
inline constexpr int kDirectPathHardMax = 56;

// u (u + k beta)^(k-1), the Abel factor. k = 0 returns 1 even at u = 0 (the
// one convention under which the partition expansions hold term by term at
// the boundary); u = 0 with k >= 1 returns 0. Rejects negative u or beta;
// throws std::overflow_error when the value exceeds double range, which is
// the cue to use log_abel_factor instead.
double abel_factor(double u, int k, double beta);

// log of abel_factor; -inf is the in-band encoding of a zero factor.
double log_abel_factor(double u, int k, double beta);

struct UnivariateWeights {
  OperatorParams params;
  double x;
  std::vector<double> w;  // w[k], k = 0..n

  double sum() const;  // compensated
  double min_weight() const;
  std::string to_csv() const;  // header "k,weight", 17 significant digits
};

struct BivariateWeights {
  OperatorParams params;
  SimplexPoint x;
  std::vector<MultiIndex> lattice;  // simplex_lattice(n) order
  std::vector<double> w;            // aligned with lattice

  double sum() const;
  double min_weight() const;
  std::string to_csv() const;  // header "k1,k2,weight"
};

UnivariateWeights univariate_weights(const OperatorParams& params, double x,
                                     WeightPath path = WeightPath::kAuto);

// threads: 1 = serial fill, 0 = parallel fill for large lattices. Every slot
// is computed independently, so the table is bit-identical either way.
BivariateWeights bivariate_weights(const OperatorParams& params, const SimplexPoint& x,
                                   WeightPath path = WeightPath::kAuto, int threads = 0);

}  // namespace cs
