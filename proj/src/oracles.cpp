#include "cs/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cs::oracle {
namespace {

// Abel factor on the oracle's own route: std::pow, no squaring, no logs.
double oracle_abel(double u, int k, double beta) {
  if (k == 0) return 1.0;
  if (k == 1) return u;
  if (u == 0.0) return 0.0;
  return u * std::pow(u + k * beta, k - 1);
}

// binomial row by the multiplicative recurrence
std::vector<double> binom_row(int m) {
  std::vector<double> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1.0;
  for (int k = 1; k <= m; ++k) row[k] = row[k - 1] * (m - k + 1) / k;
  return row;
}

}  // namespace

double abel_jensen_residual(double u, double v, double beta, int m) {
  if (!(u >= 0.0) || !(v >= 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
    throw std::invalid_argument("abel_jensen_residual needs finite u, v >= 0");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("abel_jensen_residual needs finite beta >= 0");
  }
  if (m < 1) throw std::invalid_argument("abel_jensen_residual needs m >= 1");

  const double lhs = (u + v) * std::pow(u + v + m * beta, m - 1);
  const std::vector<double> bin = binom_row(m);
  double rhs = 0.0;
  for (int k = 0; k <= m; ++k) {
    rhs += bin[k] * oracle_abel(u, k, beta) * oracle_abel(v, m - k, beta);
  }
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    throw std::overflow_error("abel_jensen_residual: direct evaluation overflowed");
  }
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double bernstein_simplex(const FunctionDescriptor& f, int n, const SimplexPoint& x) {
  if (n < 1) throw std::invalid_argument("bernstein_simplex needs n >= 1");
  const double rem = x.remainder();
  const double inv_n = 1.0 / n;
  const std::vector<double> outer = binom_row(n);
  double total = 0.0;
  for (int k1 = 0; k1 <= n; ++k1) {
    const std::vector<double> inner = binom_row(n - k1);
    for (int k2 = 0; k2 <= n - k1; ++k2) {
      const double basis = outer[k1] * inner[k2] * std::pow(x.x1(), k1) *
                           std::pow(x.x2(), k2) * std::pow(rem, n - k1 - k2);
      total += basis * f.eval(SimplexPoint(k1 * inv_n, k2 * inv_n));
    }
  }
  return total;
}

double direct_sum_G(const FunctionDescriptor& f, const OperatorParams& params,
                    const SimplexPoint& x) {
  if (params.n > 30 || params.n * params.beta > 5.0) {
    throw std::domain_error("direct_sum_G safe range is n <= 30 and n*beta <= 5");
  }
  const int n = params.n;
  const double beta = params.beta;
  const double rem = x.remainder();
  const double inv_n = 1.0 / n;

  std::vector<double> fact(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

  const double norm = std::pow(1.0 + n * beta, 1.0 - n);
  double total = 0.0;
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k2 <= n - k1; ++k2) {
      const int r = n - k1 - k2;
      const double mult = fact[n] / (fact[k1] * fact[k2] * fact[r]);
      total += f.eval(SimplexPoint(k1 * inv_n, k2 * inv_n)) * mult *
               oracle_abel(x.x1(), k1, beta) * oracle_abel(x.x2(), k2, beta) *
               oracle_abel(rem, r, beta);
    }
  }
  return norm * total;
}

}  // namespace cs::oracle
