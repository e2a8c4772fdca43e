#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cs/core.hpp"
#include "cs/operators.hpp"
#include "cs/rng.hpp"
#include "cs/scans.hpp"

using cs::FunctionDescriptor;
using cs::OperatorParams;
using cs::SimplexPoint;

TEST_CASE("Q reproduces constants") {
  const auto f = FunctionDescriptor::constant(2.5);
  for (const int n : {1, 4, 25, 80}) {
    for (const double beta : {0.0, 0.3, 10.0}) {
      CHECK(std::abs(cs::eval_Q(f, OperatorParams(n, beta), 0.37) - 2.5) <= 1e-12);
    }
  }
}

TEST_CASE("Q reproduces linear functions") {
  const auto t = FunctionDescriptor::proj(1);
  cs::SplitMix64 rng(3);
  for (const int n : {1, 5, 40, 100}) {
    for (const double beta : {0.0, 0.2, 1.0, 10.0}) {
      const OperatorParams params(n, beta);
      for (int rep = 0; rep < 20; ++rep) {
        const double x = rng.u01();
        CHECK(std::abs(cs::eval_Q(t, params, x) - x) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Q at n = 1 interpolates the endpoints") {
  // weights are (1-x, x), so t^2 maps to x
  const auto tsq = FunctionDescriptor::poly({{2, 0, 1.0}});
  CHECK(cs::eval_Q(tsq, OperatorParams(1, 0.3), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("G reproduces constants and interpolates vertices") {
  const auto f = FunctionDescriptor::constant(2.0);
  for (const int n : {1, 7, 35}) {
    for (const double beta : {0.0, 1.0, 10.0}) {
      const OperatorParams params(n, beta);
      CHECK(std::abs(cs::eval_G(f, params, SimplexPoint(0.2, 0.2)) - 2.0) <= 1e-12);
    }
  }

  const auto g = FunctionDescriptor::exp_sum();
  const OperatorParams params(9, 0.4);
  CHECK(cs::eval_G(g, params, SimplexPoint(0.0, 0.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cs::eval_G(g, params, SimplexPoint(1.0, 0.0)) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("G at n = 1 is the barycentric average") {
  const SimplexPoint x(0.3, 0.2);
  for (const double beta : {0.0, 0.5, 4.0}) {
    const OperatorParams params(1, beta);
    const auto f = FunctionDescriptor::exp_sum();
    const double expected = 0.5 * 1.0 + 0.3 * std::exp(1.0) + 0.2 * std::exp(1.0);
    CHECK(cs::eval_G(f, params, x) == doctest::Approx(expected).epsilon(1e-14));

    const auto h = FunctionDescriptor::sqrt_sum();
    const double hexp = 0.5 * 0.0 + 0.3 * 1.0 + 0.2 * 1.0;
    CHECK(cs::eval_G(h, params, x) == doctest::Approx(hexp).epsilon(1e-14));
  }
}

TEST_CASE("marginal collapse onto each axis") {
  const auto t = FunctionDescriptor::proj(1);
  CHECK(std::abs(cs::eval_G_marginal(t, 1, OperatorParams(4, 0.5), SimplexPoint(0.2, 0.3)) -
                 0.2) <= 1e-12);

  const auto c = FunctionDescriptor::constant(5.0);
  CHECK(std::abs(cs::eval_G_marginal(c, 2, OperatorParams(6, 0.1), SimplexPoint(0.1, 0.4)) -
                 5.0) <= 1e-12);

  const auto root = FunctionDescriptor::sqrt_sum();
  const OperatorParams params(3, 0.1);
  const SimplexPoint x(0.1, 0.4);
  CHECK(std::abs(cs::eval_G_marginal(root, 2, params, x) - cs::eval_Q(root, params, 0.4)) <=
        1e-11);

  CHECK_THROWS_AS(cs::eval_G_marginal(t, 3, params, x), std::invalid_argument);
}

TEST_CASE("marginal collapse across a degree sweep") {
  cs::SplitMix64 rng(23);
  for (const int n : {2, 10, 30, 50}) {
    for (const double beta : {0.0, 0.3, 2.0}) {
      const OperatorParams params(n, beta);
      const SimplexPoint x = cs::sample_simplex(rng);
      for (const auto& g : cs::marginal_probes()) {
        for (int axis = 1; axis <= 2; ++axis) {
          const double coord = axis == 1 ? x.x1() : x.x2();
          CHECK(std::abs(cs::eval_G_marginal(g, axis, params, x) -
                         cs::eval_Q(g, params, coord)) <= 1e-11);
        }
      }
    }
  }
}

TEST_CASE("difference expansion vanishes for constants and coincident points") {
  const auto c = FunctionDescriptor::constant(4.2);
  const OperatorParams params(6, 0.3);
  const SimplexPoint x(0.1, 0.1);
  const SimplexPoint y(0.3, 0.4);
  CHECK(cs::difference_expansion(c, params, x, y) == 0.0);

  const auto f = FunctionDescriptor::exp_sum();
  CHECK(cs::difference_expansion(f, params, x, x) == 0.0);
}

TEST_CASE("difference expansion at n = 1 has the closed form") {
  const SimplexPoint x(0.1, 0.1);
  const SimplexPoint y(0.3, 0.4);
  const auto f = FunctionDescriptor::exp_sum();
  for (const double beta : {0.0, 0.7}) {
    const OperatorParams params(1, beta);
    const double f00 = 1.0;
    const double f10 = std::exp(1.0);
    const double f01 = std::exp(1.0);
    const double expected = 0.2 * f10 + 0.3 * f01 - 0.5 * f00;
    CHECK(cs::difference_expansion(f, params, x, y) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("difference expansion equals the direct operator difference") {
  cs::SplitMix64 rng(41);
  const auto corpus = cs::standard_corpus();
  for (const int n : {1, 3, 7, 12}) {
    for (const double beta : {0.0, 0.1, 1.0}) {
      const OperatorParams params(n, beta);
      for (int rep = 0; rep < 15; ++rep) {
        const auto [x, y] = cs::sample_ordered_pair(rng);
        const auto expanded = cs::difference_expansion_batch(corpus, params, x, y);
        for (std::size_t fi = 0; fi < corpus.size(); ++fi) {
          const double direct =
              cs::eval_G(corpus[fi], params, y) - cs::eval_G(corpus[fi], params, x);
          CHECK(std::abs(expanded[fi] - direct) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("difference expansion rejects unordered pairs") {
  const auto f = FunctionDescriptor::proj(1);
  const OperatorParams params(4, 0.2);
  CHECK_THROWS_AS(
      cs::difference_expansion(f, params, SimplexPoint(0.3, 0.1), SimplexPoint(0.1, 0.4)),
      std::invalid_argument);
}

TEST_CASE("G is a positive operator and monotone in its argument") {
  cs::SplitMix64 rng(57);
  const std::vector<FunctionDescriptor> nonneg = {
      FunctionDescriptor::constant(1.0), FunctionDescriptor::abs_dist(0.5, 0.5, 0.5),
      FunctionDescriptor::sqrt_sum(), FunctionDescriptor::exp_sum(),
      FunctionDescriptor::min_sum(0.3)};
  for (const int n : {3, 15, 40}) {
    for (const double beta : {0.0, 1.0}) {
      const OperatorParams params(n, beta);
      for (int rep = 0; rep < 10; ++rep) {
        const SimplexPoint x = cs::sample_simplex(rng);
        for (const auto& f : nonneg) CHECK(cs::eval_G(f, params, x) >= -1e-14);

        // min(0.5, s) <= s pointwise, sqrt(s) <= 1 pointwise
        const auto lo = FunctionDescriptor::min_sum(0.5);
        const auto hi = FunctionDescriptor::poly({{1, 0, 1.0}, {0, 1, 1.0}});
        CHECK(cs::eval_G(lo, params, x) <= cs::eval_G(hi, params, x) + 1e-14);
        CHECK(cs::eval_G(FunctionDescriptor::sqrt_sum(), params, x) <=
              cs::eval_G(FunctionDescriptor::constant(1.0), params, x) + 1e-14);
      }
    }
  }
}

TEST_CASE("evaluate dispatches on the point type") {
  const auto f = FunctionDescriptor::proj(1);
  const OperatorParams params(5, 0.2);
  CHECK(cs::evaluate({f, params, 0.4}) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(cs::evaluate({f, params, SimplexPoint(0.4, 0.1)}) ==
        cs::eval_G(f, params, SimplexPoint(0.4, 0.1)));
}
