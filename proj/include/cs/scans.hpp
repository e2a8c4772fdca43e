#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cs/core.hpp"
#include "cs/report.hpp"

namespace cs {

// The function corpus the randomized suites sweep by default.
std::vector<FunctionDescriptor> standard_corpus();

// The three univariate probes (t, t^0.5, t^2) used by the marginal scan.
std::vector<FunctionDescriptor> marginal_probes();

// beta as a function of n for convergence tables:
//   const:<b>   beta = b
//   decay:<c>   beta = c / n
//   decay2:<c>  beta = c / n^2
struct BetaSchedule {
  enum class Kind { kConst, kDecay, kDecay2 };

  Kind kind = Kind::kConst;
  double c = 0.0;

  double beta_for(int n) const;
  static BetaSchedule parse(std::string_view text);
  std::string to_string() const;
};

// Empirical sup of |f(x)-f(y)| / (|dx1|^mu + |dx2|^mu) over random pairs;
// a lower bound on the true constant.
double estimate_lipschitz_constant(const FunctionDescriptor& f, double mu, int samples,
                                   std::uint64_t seed);

// Every scan below distributes trials across threads (0 = auto, 1 = serial);
// trial i draws from trial_rng(seed, i) and the merge is order-fixed, so the
// report is identical for any thread count.

// max |sum of weights - 1| and weight nonnegativity over random x.
VerificationReport verify_partition(const OperatorParams& params, int points,
                                    std::uint64_t seed, double tol, int threads = 0);

// Abel–Jensen residual over random (u, v) in [0,1]^2, m = 1..m_max, each beta.
VerificationReport verify_abel_jensen(int m_max, int trials, const std::vector<double>& betas,
                                      std::uint64_t seed, double tol, int threads = 0);

// |G at beta = 0 - Bernstein oracle| over random x, for each function.
VerificationReport verify_bernstein0(const std::vector<FunctionDescriptor>& fs, int n,
                                     int points, std::uint64_t seed, double tol,
                                     int threads = 0);

// |difference_expansion - (G(f;y) - G(f;x))| over random ordered pairs.
VerificationReport verify_difference(const std::vector<FunctionDescriptor>& fs,
                                     const OperatorParams& params, int pairs,
                                     std::uint64_t seed, double tol, int threads = 0);

// |eval_G_marginal - eval_Q| for the marginal probes on both axes.
VerificationReport verify_marginal(const OperatorParams& params, int points,
                                   std::uint64_t seed, double tol, int threads = 0);

// |G(f;y) - G(f;x)| <= M (|dy1|^mu + |dy2|^mu) + tol over random pairs,
// mixed orders included. f is asserted (not verified) to lie in the declared
// class; an understated M shows up as violations.
VerificationReport verify_lipschitz_preservation(const FunctionDescriptor& f,
                                                 const LipschitzSpec& spec,
                                                 const OperatorParams& params, int pairs,
                                                 std::uint64_t seed, double tol,
                                                 int threads = 0);

// Modulus-of-continuity axioms for g = G(omega): g(0,0) = 0, componentwise
// monotonicity over ordered pairs, semi-additivity over summable pairs.
// The raw descriptor is checked first on the same samples; if it fails, the
// returned report carries check = "modulus_precondition" and describes the
// precondition failure instead.
VerificationReport verify_modulus_axioms(const FunctionDescriptor& omega,
                                         const OperatorParams& params, int samples,
                                         std::uint64_t seed, double tol, int threads = 0);

struct ConvergenceRow {
  int n = 0;
  double beta = 0.0;
  double sup_error = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string to_csv() const;  // header "n,beta,sup_error"
};

// sup over the uniform triangular grid of |G(f;x) - f(x)| per (n, beta_n).
// Trends are reported, never asserted.
ConvergenceTable convergence_table(const FunctionDescriptor& f, const std::vector<int>& n_list,
                                   const BetaSchedule& schedule, int grid_resolution,
                                   int threads = 0);

}  // namespace cs
