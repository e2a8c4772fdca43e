#pragma once

#include "cs/core.hpp"

// Brute-force references used to cross-check the main implementation. These
// deliberately share no numeric code with the weight kernels: separate
// binomials (multiplicative rows, plain factorials), std::pow instead of the
// squaring/log routes, plain uncompensated sums. Performance is a non-goal.
namespace cs::oracle {

// Relative residual of the degree-m Abel–Jensen expansion of
// (u+v)(u+v+m beta)^(m-1), |lhs - rhs| / max(1, |lhs|), evaluated directly.
// Throws std::overflow_error where direct evaluation leaves double range.
double abel_jensen_residual(double u, double v, double beta, int m);

// Bernstein operator on the simplex via the multinomial formula.
double bernstein_simplex(const FunctionDescriptor& f, int n, const SimplexPoint& x);

// Naive direct summation of the bivariate operator; safe range n <= 30 and
// n*beta <= 5, rejected outside it.
double direct_sum_G(const FunctionDescriptor& f, const OperatorParams& params,
                    const SimplexPoint& x);

}  // namespace cs::oracle
