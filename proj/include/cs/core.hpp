#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cs {

// Lattice point k = (k1, k2); basis functions of degree n are indexed by the
// points with k1 + k2 <= n.
struct MultiIndex {
  int k1 = 0;
  int k2 = 0;

  int total() const { return k1 + k2; }
  auto operator<=>(const MultiIndex&) const = default;
};

// A point of the triangle S = {x1, x2 >= 0, x1 + x2 <= 1}. Construction
// validates membership. Sums overshooting 1 by at most kSumSlack (rounding
// noise from downstream point differences) are clamped back onto the
// boundary; anything worse is rejected.
class SimplexPoint {
 public:
  static constexpr double kSumSlack = 1e-12;

  SimplexPoint(double x1, double x2);

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  double sum() const { return x1_ + x2_; }

  // 1 - x1 - x2, clipped at zero.
  double remainder() const;

  bool operator==(const SimplexPoint&) const = default;

 private:
  double x1_;
  double x2_;
};

// Componentwise partial order: x <= y iff x1 <= y1 and x2 <= y2.
bool componentwise_leq(const SimplexPoint& x, const SimplexPoint& y);

// Degree n >= 1 and nonnegative basis parameter beta.
struct OperatorParams {
  OperatorParams(int n, double beta);

  int n;
  double beta;
};

// All (k1, k2) with k1 + k2 <= n, lexicographic (k1 outer, k2 inner).
std::vector<MultiIndex> simplex_lattice(int n);

// (n+1)(n+2)/2
std::size_t lattice_size(int n);

// Flat position of (k1, k2) inside simplex_lattice(n).
std::size_t lattice_index(int n, int k1, int k2);

struct PolyTerm {
  int i = 0;
  int j = 0;
  double c = 0.0;
};

// Closed family of test functions on S. The CLI grammar is
//   const:<c> | proj:1 | proj:2 | poly:i,j,c[;i,j,c]... |
//   absdist:<a1>,<a2>,<mu> | sqrtsum | minsum:<cap> | expsum
// No user-supplied code ever runs; descriptors are data.
class FunctionDescriptor {
 public:
  static FunctionDescriptor constant(double c);
  static FunctionDescriptor proj(int axis);
  static FunctionDescriptor poly(std::vector<PolyTerm> terms);
  static FunctionDescriptor abs_dist(double a1, double a2, double mu);
  static FunctionDescriptor sqrt_sum();
  static FunctionDescriptor min_sum(double cap);
  static FunctionDescriptor exp_sum();

  static FunctionDescriptor parse(std::string_view text);
  std::string to_string() const;

  // f(x1, x2)
  double eval(const SimplexPoint& x) const;
  // Univariate view: f(t, 0). Gives proj:1 -> t, sqrtsum -> sqrt(t),
  // absdist:0,0,mu -> t^mu, poly:i,0,c -> c t^i.
  double eval1(double t) const;

 private:
  struct Const {
    double c;
  };
  struct Proj {
    int axis;
  };
  struct Poly {
    std::vector<PolyTerm> terms;
  };
  struct AbsDist {
    double a1;
    double a2;
    double mu;
  };
  struct SqrtSum {};
  struct MinSum {
    double cap;
  };
  struct ExpSum {};
  using Node = std::variant<Const, Proj, Poly, AbsDist, SqrtSum, MinSum, ExpSum>;

  explicit FunctionDescriptor(Node node);

  Node node_;
};

// Parameters of the class Lip_M(mu): |f(x)-f(y)| <= M (|dx1|^mu + |dx2|^mu).
struct LipschitzSpec {
  LipschitzSpec(double mu, double M);

  double mu;
  double M;
};

}  // namespace cs
