#pragma once

#include <span>
#include <variant>
#include <vector>

#include "cs/core.hpp"
#include "cs/weights.hpp"

namespace cs {

// Univariate operator on [0,1]: sum of f(k/n) against the degree-n weights.
double eval_Q(const FunctionDescriptor& f, const OperatorParams& params, double x,
              WeightPath path = WeightPath::kAuto);

// Bivariate operator on S: sum of f(k/n) over the degree-n lattice.
double eval_G(const FunctionDescriptor& f, const OperatorParams& params, const SimplexPoint& x,
              WeightPath path = WeightPath::kAuto, int threads = 0);

// G applied to a function of one coordinate, f(t1,t2) = g(t_axis).
// Algebraically this collapses to eval_Q(g, params, x_axis); the marginal
// verification scan holds the two routes against each other.
double eval_G_marginal(const FunctionDescriptor& g, int axis, const OperatorParams& params,
                       const SimplexPoint& x, WeightPath path = WeightPath::kAuto);

// Expanded form of G(f;y) - G(f;x) on the ordered cone x <= y: a quadruple
// sum over (k, l) with |k| + |l| <= n of
//   [f((k+l)/n) - f(k/n)] * n!/(k! l! (n-|k|-|l|)!)
//     * abel(x1,k1) abel(x2,k2) * abel(y1-x1,l1) abel(y2-x2,l2)
//     * abel(1-|y|, n-|k|-|l|),
// normalized by (1+n beta)^(1-n) and evaluated with the log-space kernel.
// O(n^4); meant for verification at small degree. Rejects pairs that are not
// componentwise ordered (mixed orders are handled by the scanners through
// the triangle route, not here).
double difference_expansion(const FunctionDescriptor& f, const OperatorParams& params,
                            const SimplexPoint& x, const SimplexPoint& y);

// Same quadruple sum for several functions over one shared kernel pass.
std::vector<double> difference_expansion_batch(std::span<const FunctionDescriptor> fs,
                                               const OperatorParams& params,
                                               const SimplexPoint& x, const SimplexPoint& y);

// One evaluation request: Q when the point is a scalar, G when it is a
// point of S.
struct EvalRequest {
  FunctionDescriptor f;
  OperatorParams params;
  std::variant<double, SimplexPoint> point;
};

double evaluate(const EvalRequest& req);

}  // namespace cs
