#include "cs/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "cs/format.hpp"

namespace cs {
namespace {

double ipow(double base, int e) {
  double r = 1.0;
  double b = base;
  for (int m = e; m > 0; m >>= 1) {
    if (m & 1) r *= b;
    b *= b;
  }
  return r;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

double parse_real(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad real value '" + std::string(s) + "'");
  }
  return v;
}

int parse_nonneg_int(std::string_view s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 0) {
    throw std::invalid_argument("bad nonnegative integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

SimplexPoint::SimplexPoint(double x1, double x2) : x1_(x1), x2_(x2) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw std::invalid_argument("simplex point must be finite");
  }
  if (x1 < 0.0 || x2 < 0.0) {
    throw std::invalid_argument("simplex point needs x1 >= 0 and x2 >= 0");
  }
  if (x1 + x2 > 1.0 + kSumSlack) {
    throw std::invalid_argument("simplex point needs x1 + x2 <= 1");
  }
  // Clamp rounding overshoot back onto the boundary.
  if (x1_ > 1.0) x1_ = 1.0;
  if (x1_ + x2_ > 1.0) x2_ = 1.0 - x1_;
  while (x1_ + x2_ > 1.0) x2_ = std::nextafter(x2_, 0.0);
}

double SimplexPoint::remainder() const { return std::max(0.0, 1.0 - x1_ - x2_); }

bool componentwise_leq(const SimplexPoint& x, const SimplexPoint& y) {
  return x.x1() <= y.x1() && x.x2() <= y.x2();
}

OperatorParams::OperatorParams(int n_, double beta_) : n(n_), beta(beta_) {
  if (n < 1) throw std::invalid_argument("degree n must be >= 1");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and >= 0");
  }
}

std::vector<MultiIndex> simplex_lattice(int n) {
  if (n < 1) throw std::invalid_argument("simplex_lattice needs n >= 1");
  std::vector<MultiIndex> out;
  out.reserve(lattice_size(n));
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k2 <= n - k1; ++k2) {
      out.push_back({k1, k2});
    }
  }
  return out;
}

std::size_t lattice_size(int n) {
  const auto m = static_cast<std::size_t>(n);
  return (m + 1) * (m + 2) / 2;
}

std::size_t lattice_index(int n, int k1, int k2) {
  const auto a = static_cast<std::size_t>(k1);
  return a * static_cast<std::size_t>(n + 1) - a * (a - 1) / 2 + static_cast<std::size_t>(k2);
}

FunctionDescriptor::FunctionDescriptor(Node node) : node_(std::move(node)) {}

FunctionDescriptor FunctionDescriptor::constant(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("const requires a finite value");
  return FunctionDescriptor(Const{c});
}

FunctionDescriptor FunctionDescriptor::proj(int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("proj axis must be 1 or 2");
  return FunctionDescriptor(Proj{axis});
}

FunctionDescriptor FunctionDescriptor::poly(std::vector<PolyTerm> terms) {
  if (terms.empty()) throw std::invalid_argument("poly needs at least one term");
  for (const auto& t : terms) {
    if (t.i < 0 || t.j < 0 || !std::isfinite(t.c)) {
      throw std::invalid_argument("poly term needs i, j >= 0 and finite coefficient");
    }
  }
  return FunctionDescriptor(Poly{std::move(terms)});
}

FunctionDescriptor FunctionDescriptor::abs_dist(double a1, double a2, double mu) {
  SimplexPoint anchor(a1, a2);  // validates (a1, a2) in S
  (void)anchor;
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("absdist needs 0 < mu <= 1");
  return FunctionDescriptor(AbsDist{a1, a2, mu});
}

FunctionDescriptor FunctionDescriptor::sqrt_sum() { return FunctionDescriptor(SqrtSum{}); }

FunctionDescriptor FunctionDescriptor::min_sum(double cap) {
  if (!(cap > 0.0) || !std::isfinite(cap)) throw std::invalid_argument("minsum needs cap > 0");
  return FunctionDescriptor(MinSum{cap});
}

FunctionDescriptor FunctionDescriptor::exp_sum() { return FunctionDescriptor(ExpSum{}); }

FunctionDescriptor FunctionDescriptor::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const bool has_args = colon != std::string_view::npos;
  const std::string_view rest = has_args ? text.substr(colon + 1) : std::string_view{};

  if (head == "const" && has_args) return constant(parse_real(rest));
  if (head == "proj" && has_args) return proj(parse_nonneg_int(rest));
  if (head == "poly" && has_args) {
    std::vector<PolyTerm> terms;
    for (const auto part : split(rest, ';')) {
      const auto fields = split(part, ',');
      if (fields.size() != 3) throw std::invalid_argument("poly term must be i,j,c");
      terms.push_back({parse_nonneg_int(fields[0]), parse_nonneg_int(fields[1]),
                       parse_real(fields[2])});
    }
    return poly(std::move(terms));
  }
  if (head == "absdist" && has_args) {
    const auto fields = split(rest, ',');
    if (fields.size() != 3) throw std::invalid_argument("absdist needs a1,a2,mu");
    return abs_dist(parse_real(fields[0]), parse_real(fields[1]), parse_real(fields[2]));
  }
  if (head == "minsum" && has_args) return min_sum(parse_real(rest));
  if (head == "sqrtsum" && !has_args) return sqrt_sum();
  if (head == "expsum" && !has_args) return exp_sum();
  throw std::invalid_argument("unknown function descriptor '" + std::string(text) + "'");
}

std::string FunctionDescriptor::to_string() const {
  struct Printer {
    std::string operator()(const Const& f) const { return "const:" + format_exact(f.c); }
    std::string operator()(const Proj& f) const { return "proj:" + std::to_string(f.axis); }
    std::string operator()(const Poly& f) const {
      std::string out = "poly:";
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(f.terms[i].i) + "," + std::to_string(f.terms[i].j) + "," +
               format_exact(f.terms[i].c);
      }
      return out;
    }
    std::string operator()(const AbsDist& f) const {
      return "absdist:" + format_exact(f.a1) + "," + format_exact(f.a2) + "," +
             format_exact(f.mu);
    }
    std::string operator()(const SqrtSum&) const { return "sqrtsum"; }
    std::string operator()(const MinSum& f) const { return "minsum:" + format_exact(f.cap); }
    std::string operator()(const ExpSum&) const { return "expsum"; }
  };
  return std::visit(Printer{}, node_);
}

double FunctionDescriptor::eval(const SimplexPoint& x) const {
  struct Eval {
    const SimplexPoint& x;

    double operator()(const Const& f) const { return f.c; }
    double operator()(const Proj& f) const { return f.axis == 1 ? x.x1() : x.x2(); }
    double operator()(const Poly& f) const {
      double total = 0.0;
      for (const auto& t : f.terms) total += t.c * ipow(x.x1(), t.i) * ipow(x.x2(), t.j);
      return total;
    }
    double operator()(const AbsDist& f) const {
      const double d1 = std::abs(x.x1() - f.a1);
      const double d2 = std::abs(x.x2() - f.a2);
      if (f.mu == 1.0) return d1 + d2;
      return std::pow(d1, f.mu) + std::pow(d2, f.mu);
    }
    double operator()(const SqrtSum&) const { return std::sqrt(x.sum()); }
    double operator()(const MinSum& f) const { return std::min(f.cap, x.sum()); }
    double operator()(const ExpSum&) const { return std::exp(x.sum()); }
  };
  return std::visit(Eval{x}, node_);
}

double FunctionDescriptor::eval1(double t) const { return eval(SimplexPoint(t, 0.0)); }

LipschitzSpec::LipschitzSpec(double mu_, double M_) : mu(mu_), M(M_) {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("LipschitzSpec needs 0 < mu <= 1");
  if (!(M > 0.0) || !std::isfinite(M)) throw std::invalid_argument("LipschitzSpec needs M > 0");
}

}  // namespace cs
