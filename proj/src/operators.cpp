#include "cs/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "cs/detail/log_kernel.hpp"
#include "cs/factorials.hpp"
#include "cs/parallel.hpp"
#include "cs/stable_sum.hpp"

namespace cs {
namespace {

using detail::LogAbelTable;
using detail::LogSum;
using detail::scaled;
using detail::Split;

constexpr std::int64_t kParallelFillMin = 8192;

// f sampled once per lattice node, reused for the whole request. Parallel
// over rows of constant k1; each row owns a contiguous slice.
std::vector<double> node_values(const FunctionDescriptor& f, int n, int threads) {
  std::vector<double> fv(lattice_size(n));
  const double inv_n = 1.0 / n;
  const int fill_threads =
      (threads == 1 || static_cast<std::int64_t>(fv.size()) < kParallelFillMin) ? 1 : threads;
  par::parallel_index(n + 1, fill_threads, [&](std::int64_t row) {
    const int k1 = static_cast<int>(row);
    const double t1 = k1 * inv_n;
    const std::size_t offset = lattice_index(n, k1, 0);
    for (int k2 = 0; k2 <= n - k1; ++k2) {
      fv[offset + static_cast<std::size_t>(k2)] = f.eval(SimplexPoint(t1, k2 * inv_n));
    }
  });
  return fv;
}

int check_axis(int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
  return axis;
}

}  // namespace

double eval_Q(const FunctionDescriptor& f, const OperatorParams& params, double x,
              WeightPath path) {
  const UnivariateWeights wt = univariate_weights(params, x, path);
  const double inv_n = 1.0 / params.n;
  StableSum acc;
  for (int k = 0; k <= params.n; ++k) {
    acc += f.eval1(k * inv_n) * wt.w[static_cast<std::size_t>(k)];
  }
  return acc.value();
}

double eval_G(const FunctionDescriptor& f, const OperatorParams& params, const SimplexPoint& x,
              WeightPath path, int threads) {
  const BivariateWeights wt = bivariate_weights(params, x, path, threads);
  const std::vector<double> fv = node_values(f, params.n, threads);
  StableSum acc;
  for (std::size_t i = 0; i < wt.w.size(); ++i) acc += fv[i] * wt.w[i];
  return acc.value();
}

double eval_G_marginal(const FunctionDescriptor& g, int axis, const OperatorParams& params,
                       const SimplexPoint& x, WeightPath path) {
  check_axis(axis);
  const BivariateWeights wt = bivariate_weights(params, x, path, 1);
  const double inv_n = 1.0 / params.n;
  // g sampled on the marginal coordinate only; n+1 distinct values.
  std::vector<double> gv(static_cast<std::size_t>(params.n) + 1);
  for (int k = 0; k <= params.n; ++k) gv[k] = g.eval1(k * inv_n);
  StableSum acc;
  for (std::size_t i = 0; i < wt.w.size(); ++i) {
    const MultiIndex k = wt.lattice[i];
    acc += gv[axis == 1 ? k.k1 : k.k2] * wt.w[i];
  }
  return acc.value();
}

std::vector<double> difference_expansion_batch(std::span<const FunctionDescriptor> fs,
                                               const OperatorParams& params,
                                               const SimplexPoint& x, const SimplexPoint& y) {
  if (!componentwise_leq(x, y)) {
    throw std::invalid_argument("difference_expansion needs x <= y componentwise");
  }
  const int n = params.n;
  const double beta = params.beta;
  if (n >= kLogFactorialCacheSize) {
    throw std::invalid_argument("degree exceeds the log-factorial cache (n <= 4096)");
  }

  const double d1 = y.x1() - x.x1();
  const double d2 = y.x2() - x.x2();
  const LogAbelTable ax1(x.x1(), beta, n);
  const LogAbelTable ax2(x.x2(), beta, n);
  const LogAbelTable al1(d1, beta, n);
  const LogAbelTable al2(d2, beta, n);
  const LogAbelTable tail(y.remainder(), beta, n);
  const Split norm = scaled(1 - n, std::log1p(n * beta));
  const LogFactorialView lf = log_factorial_view();

  std::vector<std::vector<double>> fv;
  fv.reserve(fs.size());
  for (const auto& f : fs) fv.push_back(node_values(f, n, 1));

  std::vector<StableSum> acc(fs.size());
  for (int k1 = 0; k1 <= n; ++k1) {
    if (ax1.zero(k1)) continue;
    for (int k2 = 0; k2 <= n - k1; ++k2) {
      if (ax2.zero(k2)) continue;
      const std::size_t base = lattice_index(n, k1, k2);
      const int rest_k = n - k1 - k2;
      for (int l1 = 0; l1 <= rest_k; ++l1) {
        if (al1.zero(l1)) continue;
        for (int l2 = 0; l2 <= rest_k - l1; ++l2) {
          if (al2.zero(l2)) continue;
          const int r = rest_k - l1 - l2;
          if (tail.zero(r)) continue;
          LogSum ls;
          ls.add(norm);
          ls.add_fact(lf, n);
          ls.sub_fact(lf, k1);
          ls.sub_fact(lf, k2);
          ls.sub_fact(lf, l1);
          ls.sub_fact(lf, l2);
          ls.sub_fact(lf, r);
          ls.add(ax1.at(k1));
          ls.add(ax2.at(k2));
          ls.add(al1.at(l1));
          ls.add(al2.at(l2));
          ls.add(tail.at(r));
          const double kernel = std::exp(ls.value());
          const std::size_t shifted = lattice_index(n, k1 + l1, k2 + l2);
          for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            acc[fi] += kernel * (fv[fi][shifted] - fv[fi][base]);
          }
        }
      }
    }
  }

  std::vector<double> out(fs.size());
  for (std::size_t fi = 0; fi < fs.size(); ++fi) out[fi] = acc[fi].value();
  return out;
}

double difference_expansion(const FunctionDescriptor& f, const OperatorParams& params,
                            const SimplexPoint& x, const SimplexPoint& y) {
  return difference_expansion_batch(std::span(&f, 1), params, x, y).front();
}

double evaluate(const EvalRequest& req) {
  if (std::holds_alternative<double>(req.point)) {
    return eval_Q(req.f, req.params, std::get<double>(req.point));
  }
  return eval_G(req.f, req.params, std::get<SimplexPoint>(req.point));
}

}  // namespace cs
