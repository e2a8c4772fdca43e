#include "cs/scans.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "cs/format.hpp"
#include "cs/operators.hpp"
#include "cs/oracles.hpp"
#include "cs/parallel.hpp"
#include "cs/rng.hpp"
#include "cs/weights.hpp"

namespace cs {
namespace {

struct Outcome {
  double residual = 0.0;
  std::string input;  // filled only when the trial violates
};

// Shared scan skeleton: trials run in any order, each writes its own slot,
// and the merge walks slots in trial order, so serial and parallel runs
// produce identical reports.
template <class TrialFn>
VerificationReport run_scan(std::string check, int trials, std::uint64_t seed, double tol,
                            int threads, TrialFn&& trial) {
  if (trials < 1) throw std::invalid_argument("scan needs at least one trial");
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  std::vector<Outcome> out(static_cast<std::size_t>(trials));
  par::parallel_index(trials, threads, [&](std::int64_t i) { out[i] = trial(i); });

  VerificationReport rep;
  rep.check = std::move(check);
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = tol;
  for (auto& o : out) {
    rep.max_residual = std::max(rep.max_residual, o.residual);
    if (o.residual > tol) rep.violations.push_back({std::move(o.input), o.residual});
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

std::string pt(const SimplexPoint& p) {
  return "(" + format_exact(p.x1()) + "," + format_exact(p.x2()) + ")";
}

double mu_power(double d, double mu) { return mu == 1.0 ? d : std::pow(d, mu); }

}  // namespace

std::vector<FunctionDescriptor> standard_corpus() {
  return {
      FunctionDescriptor::constant(1.0),
      FunctionDescriptor::proj(1),
      FunctionDescriptor::proj(2),
      FunctionDescriptor::poly({{2, 0, 1.0}}),
      FunctionDescriptor::poly({{1, 1, 1.0}, {2, 0, 0.5}}),
      FunctionDescriptor::abs_dist(0.5, 0.5, 0.5),
      FunctionDescriptor::abs_dist(0.3, 0.4, 1.0),
      FunctionDescriptor::sqrt_sum(),
      FunctionDescriptor::min_sum(0.5),
      FunctionDescriptor::exp_sum(),
  };
}

std::vector<FunctionDescriptor> marginal_probes() {
  return {
      FunctionDescriptor::proj(1),        // t
      FunctionDescriptor::sqrt_sum(),     // t^0.5 on the marginal
      FunctionDescriptor::poly({{2, 0, 1.0}}),  // t^2
  };
}

double BetaSchedule::beta_for(int n) const {
  switch (kind) {
    case Kind::kConst:
      return c;
    case Kind::kDecay:
      return c / n;
    case Kind::kDecay2:
      return c / (static_cast<double>(n) * n);
  }
  return c;
}

BetaSchedule BetaSchedule::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("beta schedule must be const:<b>, decay:<c> or decay2:<c>");
  }
  const std::string_view head = text.substr(0, colon);
  double c = 0.0;
  try {
    c = std::stod(std::string(text.substr(colon + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad beta schedule constant");
  }
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("beta schedule constant must be finite and >= 0");
  }
  if (head == "const") return {Kind::kConst, c};
  if (head == "decay") return {Kind::kDecay, c};
  if (head == "decay2") return {Kind::kDecay2, c};
  throw std::invalid_argument("beta schedule must be const:<b>, decay:<c> or decay2:<c>");
}

std::string BetaSchedule::to_string() const {
  switch (kind) {
    case Kind::kConst:
      return "const:" + format_exact(c);
    case Kind::kDecay:
      return "decay:" + format_exact(c);
    case Kind::kDecay2:
      return "decay2:" + format_exact(c);
  }
  return {};
}

double estimate_lipschitz_constant(const FunctionDescriptor& f, double mu, int samples,
                                   std::uint64_t seed) {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("mu must lie in (0, 1]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    SplitMix64 rng = trial_rng(seed, i);
    double denom = 0.0;
    double ratio = 0.0;
    do {
      const auto [x, y] = sample_pair(rng);
      denom = mu_power(std::abs(x.x1() - y.x1()), mu) +
              mu_power(std::abs(x.x2() - y.x2()), mu);
      if (denom > 0.0) ratio = std::abs(f.eval(x) - f.eval(y)) / denom;
    } while (denom == 0.0);
    best = std::max(best, ratio);
  }
  return best;
}

VerificationReport verify_partition(const OperatorParams& params, int points,
                                    std::uint64_t seed, double tol, int threads) {
  return run_scan("partition", points, seed, tol, threads, [&](std::int64_t i) {
    SplitMix64 rng = trial_rng(seed, i);
    const SimplexPoint x = sample_simplex(rng);
    const BivariateWeights wt = bivariate_weights(params, x, WeightPath::kAuto, 1);
    const double sum_res = std::abs(wt.sum() - 1.0);
    const double neg = -std::min(0.0, wt.min_weight());
    Outcome o;
    o.residual = std::max(sum_res, neg);
    if (o.residual > tol) o.input = "x=" + pt(x);
    return o;
  });
}

VerificationReport verify_abel_jensen(int m_max, int trials, const std::vector<double>& betas,
                                      std::uint64_t seed, double tol, int threads) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  if (betas.empty()) throw std::invalid_argument("at least one beta is required");
  return run_scan("abel-jensen", trials, seed, tol, threads, [&](std::int64_t i) {
    SplitMix64 rng = trial_rng(seed, i);
    const double u = rng.u01();
    const double v = rng.u01();
    Outcome o;
    int worst_m = 1;
    double worst_beta = betas.front();
    for (int m = 1; m <= m_max; ++m) {
      for (const double beta : betas) {
        const double r = oracle::abel_jensen_residual(u, v, beta, m);
        if (r > o.residual) {
          o.residual = r;
          worst_m = m;
          worst_beta = beta;
        }
      }
    }
    if (o.residual > tol) {
      o.input = "u=" + format_exact(u) + ",v=" + format_exact(v) + ",m=" +
                std::to_string(worst_m) + ",beta=" + format_exact(worst_beta);
    }
    return o;
  });
}

VerificationReport verify_bernstein0(const std::vector<FunctionDescriptor>& fs, int n,
                                     int points, std::uint64_t seed, double tol, int threads) {
  if (fs.empty()) throw std::invalid_argument("at least one function is required");
  const OperatorParams params(n, 0.0);
  return run_scan("bernstein0", points, seed, tol, threads, [&](std::int64_t i) {
    SplitMix64 rng = trial_rng(seed, i);
    const SimplexPoint x = sample_simplex(rng);
    Outcome o;
    std::size_t worst_f = 0;
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const double r = std::abs(eval_G(fs[fi], params, x, WeightPath::kAuto, 1) -
                                oracle::bernstein_simplex(fs[fi], n, x));
      if (r > o.residual) {
        o.residual = r;
        worst_f = fi;
      }
    }
    if (o.residual > tol) o.input = "f=" + fs[worst_f].to_string() + ";x=" + pt(x);
    return o;
  });
}

VerificationReport verify_difference(const std::vector<FunctionDescriptor>& fs,
                                     const OperatorParams& params, int pairs,
                                     std::uint64_t seed, double tol, int threads) {
  if (fs.empty()) throw std::invalid_argument("at least one function is required");
  return run_scan("difference", pairs, seed, tol, threads, [&](std::int64_t i) {
    SplitMix64 rng = trial_rng(seed, i);
    const auto [x, y] = sample_ordered_pair(rng);
    const std::vector<double> expanded = difference_expansion_batch(fs, params, x, y);
    Outcome o;
    std::size_t worst_f = 0;
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const double direct = eval_G(fs[fi], params, y, WeightPath::kAuto, 1) -
                            eval_G(fs[fi], params, x, WeightPath::kAuto, 1);
      const double r = std::abs(expanded[fi] - direct);
      if (r > o.residual) {
        o.residual = r;
        worst_f = fi;
      }
    }
    if (o.residual > tol) {
      o.input = "f=" + fs[worst_f].to_string() + ";x=" + pt(x) + ";y=" + pt(y);
    }
    return o;
  });
}

VerificationReport verify_marginal(const OperatorParams& params, int points,
                                   std::uint64_t seed, double tol, int threads) {
  const std::vector<FunctionDescriptor> gs = marginal_probes();
  return run_scan("marginal", points, seed, tol, threads, [&](std::int64_t i) {
    SplitMix64 rng = trial_rng(seed, i);
    const SimplexPoint x = sample_simplex(rng);
    Outcome o;
    std::size_t worst_g = 0;
    int worst_axis = 1;
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      for (int axis = 1; axis <= 2; ++axis) {
        const double coord = axis == 1 ? x.x1() : x.x2();
        const double r = std::abs(eval_G_marginal(gs[gi], axis, params, x) -
                                  eval_Q(gs[gi], params, coord));
        if (r > o.residual) {
          o.residual = r;
          worst_g = gi;
          worst_axis = axis;
        }
      }
    }
    if (o.residual > tol) {
      o.input = "g=" + gs[worst_g].to_string() + ";axis=" + std::to_string(worst_axis) +
                ";x=" + pt(x);
    }
    return o;
  });
}

VerificationReport verify_lipschitz_preservation(const FunctionDescriptor& f,
                                                 const LipschitzSpec& spec,
                                                 const OperatorParams& params, int pairs,
                                                 std::uint64_t seed, double tol, int threads) {
  return run_scan("lipschitz", pairs, seed, tol, threads, [&](std::int64_t i) {
    SplitMix64 rng = trial_rng(seed, i);
    const auto [x, y] = sample_pair(rng);  // mixed orders included
    const double gap = std::abs(eval_G(f, params, y, WeightPath::kAuto, 1) -
                                eval_G(f, params, x, WeightPath::kAuto, 1));
    const double bound = spec.M * (mu_power(std::abs(y.x1() - x.x1()), spec.mu) +
                                   mu_power(std::abs(y.x2() - x.x2()), spec.mu));
    Outcome o;
    o.residual = std::max(0.0, gap - bound);
    if (o.residual > tol) o.input = "x=" + pt(x) + ";y=" + pt(y);
    return o;
  });
}

namespace {

// The three modulus axioms for an arbitrary evaluator, shared by the raw
// precondition pass and the smoothed pass. Each trial draws an ordered pair
// for monotonicity and a summable pair for semi-additivity from its own
// stream; the origin check runs once and is merged in afterwards.
template <class EvalFn>
VerificationReport modulus_scan(std::string check, const EvalFn& value, int samples,
                                std::uint64_t seed, double tol, int threads) {
  VerificationReport rep =
      run_scan(std::move(check), samples, seed, tol, threads, [&](std::int64_t i) {
        SplitMix64 rng = trial_rng(seed, i);
        const auto [u, v] = sample_ordered_pair(rng);
        const double mono = std::max(0.0, value(u) - value(v));
        const auto [a, b] = sample_summable_pair(rng);
        const SimplexPoint s(a.x1() + b.x1(), a.x2() + b.x2());
        const double semi = std::max(0.0, value(s) - value(a) - value(b));
        Outcome o;
        o.residual = std::max(mono, semi);
        if (o.residual > tol) {
          if (mono > tol) o.input = "monotone:u=" + pt(u) + ",v=" + pt(v);
          if (semi > tol) {
            if (!o.input.empty()) o.input += ";";
            o.input += "semiadd:u=" + pt(a) + ",v=" + pt(b);
          }
        }
        return o;
      });

  const double origin = std::abs(value(SimplexPoint(0.0, 0.0)));
  rep.max_residual = std::max(rep.max_residual, origin);
  if (origin > tol) {
    rep.violations.insert(rep.violations.begin(), {"origin", origin});
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

}  // namespace

VerificationReport verify_modulus_axioms(const FunctionDescriptor& omega,
                                         const OperatorParams& params, int samples,
                                         std::uint64_t seed, double tol, int threads) {
  const auto raw = [&](const SimplexPoint& p) { return omega.eval(p); };
  VerificationReport pre =
      modulus_scan("modulus_precondition", raw, samples, seed, tol, threads);
  if (!pre.passed) return pre;

  const auto smoothed = [&](const SimplexPoint& p) {
    return eval_G(omega, params, p, WeightPath::kAuto, 1);
  };
  return modulus_scan("modulus", smoothed, samples, seed, tol, threads);
}

std::string ConvergenceTable::to_csv() const {
  std::string out = "n,beta,sup_error\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_sig17(row.beta);
    out += ',';
    out += format_sig17(row.sup_error);
    out += '\n';
  }
  return out;
}

ConvergenceTable convergence_table(const FunctionDescriptor& f, const std::vector<int>& n_list,
                                   const BetaSchedule& schedule, int grid_resolution,
                                   int threads) {
  if (n_list.empty()) throw std::invalid_argument("n list must not be empty");
  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");

  const std::vector<MultiIndex> nodes = simplex_lattice(grid_resolution);
  const double inv_g = 1.0 / grid_resolution;

  ConvergenceTable table;
  for (const int n : n_list) {
    const OperatorParams params(n, schedule.beta_for(n));
    std::vector<double> err(nodes.size());
    par::parallel_index(static_cast<std::int64_t>(nodes.size()), threads,
                        [&](std::int64_t i) {
                          const SimplexPoint p(nodes[i].k1 * inv_g, nodes[i].k2 * inv_g);
                          err[i] = std::abs(eval_G(f, params, p, WeightPath::kAuto, 1) -
                                            f.eval(p));
                        });
    const double sup = *std::max_element(err.begin(), err.end());
    table.rows.push_back({n, params.beta, sup});
  }
  return table;
}

}  // namespace cs
