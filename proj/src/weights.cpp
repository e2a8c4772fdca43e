#include "cs/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "cs/detail/log_kernel.hpp"
#include "cs/factorials.hpp"
#include "cs/format.hpp"
#include "cs/parallel.hpp"
#include "cs/stable_sum.hpp"

namespace cs {
namespace {

using detail::ipow;
using detail::LogAbelTable;
using detail::LogSum;
using detail::scaled;
using detail::Split;

// Below this lattice size a parallel fill costs more than it saves.
constexpr std::int64_t kParallelFillMin = 8192;

void check_abel_args(double u, int k, double beta) {
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw std::invalid_argument("abel factor needs finite u >= 0");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("abel factor needs finite beta >= 0");
  }
  if (k < 0) throw std::invalid_argument("abel factor needs k >= 0");
}

WeightPath resolve(const OperatorParams& p, WeightPath requested) {
  if (requested != WeightPath::kAuto) return requested;
  const bool direct_ok =
      p.n <= kDirectPathMaxDegree && p.n * p.beta <= kDirectPathMaxNBeta;
  return direct_ok ? WeightPath::kDirect : WeightPath::kLogSpace;
}

void check_degree_supported(const OperatorParams& p, WeightPath path) {
  if (path == WeightPath::kDirect && p.n > kDirectPathHardMax) {
    throw std::invalid_argument("direct weight path supports n <= 56; use the log path");
  }
  if (p.n >= kLogFactorialCacheSize) {
    throw std::invalid_argument("degree exceeds the log-factorial cache (n <= 4096)");
  }
}

double table_sum(const std::vector<double>& w) {
  StableSum acc;
  for (const double v : w) acc += v;
  return acc.value();
}

double table_min(const std::vector<double>& w) {
  double m = w.empty() ? 0.0 : w.front();
  for (const double v : w) m = std::min(m, v);
  return m;
}

}  // namespace

double abel_factor(double u, int k, double beta) {
  check_abel_args(u, k, beta);
  if (k == 0) return 1.0;
  if (k == 1) return u;  // exponent-zero branch first: settles 0^0 at u = beta = 0
  if (u == 0.0) return 0.0;
  const double r = u * ipow(u + k * beta, k - 1);
  if (!std::isfinite(r)) {
    throw std::overflow_error("abel_factor overflowed; evaluate in log space");
  }
  return r;
}

double log_abel_factor(double u, int k, double beta) {
  check_abel_args(u, k, beta);
  if (k == 0) return 0.0;
  if (u == 0.0) return detail::kNegInf;
  return std::log(u) + (k - 1) * std::log(u + k * beta);
}

double UnivariateWeights::sum() const { return table_sum(w); }
double UnivariateWeights::min_weight() const { return table_min(w); }

std::string UnivariateWeights::to_csv() const {
  std::string out = "k,weight\n";
  for (std::size_t k = 0; k < w.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_sig17(w[k]);
    out += '\n';
  }
  return out;
}

double BivariateWeights::sum() const { return table_sum(w); }
double BivariateWeights::min_weight() const { return table_min(w); }

std::string BivariateWeights::to_csv() const {
  std::string out = "k1,k2,weight\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += std::to_string(lattice[i].k1);
    out += ',';
    out += std::to_string(lattice[i].k2);
    out += ',';
    out += format_sig17(w[i]);
    out += '\n';
  }
  return out;
}

UnivariateWeights univariate_weights(const OperatorParams& params, double x, WeightPath path) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("univariate point must lie in [0,1]");
  }
  path = resolve(params, path);
  check_degree_supported(params, path);

  const int n = params.n;
  const double beta = params.beta;
  UnivariateWeights out{params, x, std::vector<double>(static_cast<std::size_t>(n) + 1)};

  if (path == WeightPath::kDirect) {
    const double norm = 1.0 / ipow(1.0 + n * beta, n - 1);
    const double omx = 1.0 - x;
    for (int k = 0; k <= n; ++k) {
      out.w[k] = norm * binomial_exact(n, k) * abel_factor(x, k, beta) *
                 abel_factor(omx, n - k, beta);
    }
    return out;
  }

  const LogAbelTable head(x, beta, n);
  const LogAbelTable tail(1.0 - x, beta, n);
  const Split norm = scaled(1 - n, std::log1p(n * beta));
  const LogFactorialView lf = log_factorial_view();
  for (int k = 0; k <= n; ++k) {
    if (head.zero(k) || tail.zero(n - k)) {
      out.w[k] = 0.0;
      continue;
    }
    LogSum ls;
    ls.add(norm);
    ls.add_fact(lf, n);
    ls.sub_fact(lf, k);
    ls.sub_fact(lf, n - k);
    ls.add(head.at(k));
    ls.add(tail.at(n - k));
    out.w[k] = std::exp(ls.value());
  }
  return out;
}

BivariateWeights bivariate_weights(const OperatorParams& params, const SimplexPoint& x,
                                   WeightPath path, int threads) {
  path = resolve(params, path);
  check_degree_supported(params, path);

  const int n = params.n;
  const double beta = params.beta;
  BivariateWeights out{params, x, simplex_lattice(n),
                       std::vector<double>(lattice_size(n))};
  const auto count = static_cast<std::int64_t>(out.lattice.size());

  if (path == WeightPath::kDirect) {
    const double norm = 1.0 / ipow(1.0 + n * beta, n - 1);
    const double rem = x.remainder();
    for (std::int64_t i = 0; i < count; ++i) {
      const MultiIndex k = out.lattice[i];
      out.w[i] = norm * multinomial_exact(n, k.k1, k.k2) * abel_factor(x.x1(), k.k1, beta) *
                 abel_factor(x.x2(), k.k2, beta) * abel_factor(rem, n - k.total(), beta);
    }
    return out;
  }

  const LogAbelTable a(x.x1(), beta, n);
  const LogAbelTable b(x.x2(), beta, n);
  const LogAbelTable c(x.remainder(), beta, n);
  const Split norm = scaled(1 - n, std::log1p(n * beta));
  const LogFactorialView lf = log_factorial_view();

  const int fill_threads = (threads == 1 || count < kParallelFillMin) ? 1 : threads;
  par::parallel_index(count, fill_threads, [&](std::int64_t i) {
    const MultiIndex k = out.lattice[i];
    const int r = n - k.total();
    if (a.zero(k.k1) || b.zero(k.k2) || c.zero(r)) {
      out.w[i] = 0.0;
      return;
    }
    LogSum ls;
    ls.add(norm);
    ls.add_fact(lf, n);
    ls.sub_fact(lf, k.k1);
    ls.sub_fact(lf, k.k2);
    ls.sub_fact(lf, r);
    ls.add(a.at(k.k1));
    ls.add(b.at(k.k2));
    ls.add(c.at(r));
    out.w[i] = std::exp(ls.value());
  });
  return out;
}

}  // namespace cs
