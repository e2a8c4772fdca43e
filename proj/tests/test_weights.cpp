#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "cs/core.hpp"
#include "cs/factorials.hpp"
#include "cs/rng.hpp"
#include "cs/weights.hpp"

using cs::OperatorParams;
using cs::SimplexPoint;
using cs::WeightPath;

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale < 1e-300) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("abel_factor base cases") {
  CHECK(cs::abel_factor(0.3, 0, 0.1) == 1.0);
  CHECK(cs::abel_factor(0.0, 0, 5.0) == 1.0);
  CHECK(cs::abel_factor(0.5, 1, 0.7) == 0.5);
  CHECK(cs::abel_factor(0.5, 2, 0.1) == doctest::Approx(0.35).epsilon(1e-15));
  CHECK(cs::abel_factor(0.0, 3, 0.1) == 0.0);
  CHECK(cs::abel_factor(0.0, 1, 0.0) == 0.0);  // 0^0 corner resolves through the k=1 branch
}

TEST_CASE("abel_factor rejects bad arguments and overflow") {
  CHECK_THROWS_AS(cs::abel_factor(-0.1, 2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(cs::abel_factor(0.1, 2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(cs::abel_factor(0.1, -1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(cs::abel_factor(1e200, 3, 0.0), std::overflow_error);
}

TEST_CASE("log_abel_factor agrees with the direct factor") {
  CHECK(cs::log_abel_factor(0.3, 0, 5.0) == 0.0);
  CHECK(std::isinf(cs::log_abel_factor(0.0, 3, 0.1)));
  CHECK(cs::log_abel_factor(0.5, 2, 0.1) ==
        doctest::Approx(std::log(0.35)).epsilon(1e-14));

  cs::SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const double u = rng.u01();
    const int k = static_cast<int>(rng.next() % 31);
    const double beta = (rng.next() % 4) * 0.3;
    const double direct = cs::abel_factor(u, k, beta);
    const double logged = cs::log_abel_factor(u, k, beta);
    if (direct == 0.0) {
      CHECK(std::isinf(logged));
    } else {
      CHECK(rel_diff(std::exp(logged), direct) <= 1e-13);
    }
  }
}

TEST_CASE("univariate weights at n = 1 are (1-x, x) for every beta") {
  for (const double beta : {0.0, 0.7, 3.0, 50.0}) {
    const auto wt = cs::univariate_weights(OperatorParams(1, beta), 0.25);
    REQUIRE(wt.w.size() == 2);
    CHECK(wt.w[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(wt.w[1] == doctest::Approx(0.25).epsilon(1e-15));
  }
}

TEST_CASE("univariate weights degenerate to binomials at beta = 0") {
  const int n = 5;
  const double x = 0.4;
  const auto wt = cs::univariate_weights(OperatorParams(n, 0.0), x);
  for (int k = 0; k <= n; ++k) {
    const double expected =
        cs::binomial_exact(n, k) * std::pow(x, k) * std::pow(1.0 - x, n - k);
    CHECK(rel_diff(wt.w[k], expected) <= 1e-13);
  }
}

TEST_CASE("univariate weights concentrate at the endpoints") {
  for (const double beta : {0.0, 0.3, 10.0}) {
    const auto at0 = cs::univariate_weights(OperatorParams(7, beta), 0.0);
    CHECK(at0.w[0] == 1.0);
    for (int k = 1; k <= 7; ++k) CHECK(at0.w[k] == 0.0);

    const auto at1 = cs::univariate_weights(OperatorParams(7, beta), 1.0);
    CHECK(at1.w[7] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 7; ++k) CHECK(at1.w[k] == 0.0);
  }
}

TEST_CASE("univariate weights reject points outside [0,1]") {
  CHECK_THROWS_AS(cs::univariate_weights(OperatorParams(3, 0.1), 1.5), std::invalid_argument);
  CHECK_THROWS_AS(cs::univariate_weights(OperatorParams(3, 0.1), -0.1), std::invalid_argument);
}

TEST_CASE("bivariate weights at n = 1 are the barycentric coordinates") {
  for (const double beta : {0.0, 0.4, 8.0}) {
    const auto wt = cs::bivariate_weights(OperatorParams(1, beta), SimplexPoint(0.3, 0.2));
    REQUIRE(wt.w.size() == 3);
    // lattice order (0,0), (0,1), (1,0)
    CHECK(wt.w[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(wt.w[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(wt.w[2] == doctest::Approx(0.3).epsilon(1e-15));
  }
}

TEST_CASE("bivariate weights at n = 2, beta = 0 match the multinomial expansion") {
  const auto wt = cs::bivariate_weights(OperatorParams(2, 0.0), SimplexPoint(0.3, 0.2));
  REQUIRE(wt.w.size() == 6);
  const double expected[][3] = {{0, 0, 0.25}, {0, 1, 0.20}, {0, 2, 0.04},
                                {1, 0, 0.30}, {1, 1, 0.12}, {2, 0, 0.09}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(wt.lattice[i].k1 == static_cast<int>(expected[i][0]));
    CHECK(wt.lattice[i].k2 == static_cast<int>(expected[i][1]));
    CHECK(wt.w[i] == doctest::Approx(expected[i][2]).epsilon(1e-14));
  }
}

TEST_CASE("bivariate weights concentrate at the vertices") {
  for (const double beta : {0.0, 0.5, 10.0}) {
    const OperatorParams params(6, beta);

    const auto origin = cs::bivariate_weights(params, SimplexPoint(0.0, 0.0));
    for (std::size_t i = 0; i < origin.w.size(); ++i) {
      if (origin.lattice[i] == cs::MultiIndex{0, 0}) {
        CHECK(origin.w[i] == doctest::Approx(1.0).epsilon(1e-12));
      } else {
        CHECK(origin.w[i] == 0.0);
      }
    }

    const auto right = cs::bivariate_weights(params, SimplexPoint(1.0, 0.0));
    int units = 0;
    for (std::size_t i = 0; i < right.w.size(); ++i) {
      if (std::abs(right.w[i] - 1.0) <= 1e-12) ++units;
    }
    CHECK(units == 1);

    const auto top = cs::bivariate_weights(params, SimplexPoint(0.0, 1.0));
    units = 0;
    for (std::size_t i = 0; i < top.w.size(); ++i) {
      if (std::abs(top.w[i] - 1.0) <= 1e-12) ++units;
    }
    CHECK(units == 1);
  }
}

TEST_CASE("partition of unity and nonnegativity across the sweep") {
  cs::SplitMix64 rng(31);
  for (const int n : {1, 2, 5, 10, 20, 50, 100}) {
    for (const double beta : {0.0, 0.01, 0.1, 1.0, 10.0}) {
      const OperatorParams params(n, beta);
      for (int rep = 0; rep < 20; ++rep) {
        const SimplexPoint x = cs::sample_simplex(rng);
        const auto wt = cs::bivariate_weights(params, x);
        CHECK(std::abs(wt.sum() - 1.0) <= 1e-12);
        CHECK(wt.min_weight() >= 0.0);
      }
    }
  }
}

TEST_CASE("log path matches the direct path at small degree") {
  cs::SplitMix64 rng(17);
  for (const int n : {1, 4, 9, 15, 20}) {
    for (const double beta : {0.0, 0.05, 0.2}) {
      const OperatorParams params(n, beta);
      const SimplexPoint x = cs::sample_simplex(rng);

      const auto direct = cs::bivariate_weights(params, x, WeightPath::kDirect);
      const auto logged = cs::bivariate_weights(params, x, WeightPath::kLogSpace);
      for (std::size_t i = 0; i < direct.w.size(); ++i) {
        CHECK(rel_diff(direct.w[i], logged.w[i]) <= 1e-10);
      }

      const double t = rng.u01();
      const auto udirect = cs::univariate_weights(params, t, WeightPath::kDirect);
      const auto ulogged = cs::univariate_weights(params, t, WeightPath::kLogSpace);
      for (std::size_t k = 0; k < udirect.w.size(); ++k) {
        CHECK(rel_diff(udirect.w[k], ulogged.w[k]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("parallel and serial weight fills agree bit for bit") {
  const OperatorParams params(260, 0.2);
  const SimplexPoint x(0.31, 0.17);
  const auto serial = cs::bivariate_weights(params, x, WeightPath::kLogSpace, 1);
  const auto parallel = cs::bivariate_weights(params, x, WeightPath::kLogSpace, 0);
  REQUIRE(serial.w.size() == parallel.w.size());
  CHECK(serial.w == parallel.w);
}

TEST_CASE("weight CSV uses the fixed header and LF endings") {
  const auto uni = cs::univariate_weights(OperatorParams(1, 0.7), 0.25);
  const std::string ucsv = uni.to_csv();
  CHECK(ucsv.rfind("k,weight\n", 0) == 0);
  CHECK(ucsv.find('\r') == std::string::npos);

  const auto biv = cs::bivariate_weights(OperatorParams(2, 0.3), SimplexPoint(0.2, 0.5));
  const std::string bcsv = biv.to_csv();
  CHECK(bcsv.rfind("k1,k2,weight\n", 0) == 0);
  CHECK(bcsv.find('\r') == std::string::npos);

  // 17 significant digits round-trip the stored weights exactly
  std::size_t pos = bcsv.find('\n') + 1;
  for (std::size_t i = 0; i < biv.w.size(); ++i) {
    const std::size_t line_end = bcsv.find('\n', pos);
    const std::string line = bcsv.substr(pos, line_end - pos);
    const std::size_t last_comma = line.rfind(',');
    CHECK(std::stod(line.substr(last_comma + 1)) == biv.w[i]);
    pos = line_end + 1;
  }
}

TEST_CASE("direct path bails out beyond the exact-binomial range") {
  CHECK_THROWS_AS(
      cs::bivariate_weights(OperatorParams(60, 0.0), SimplexPoint(0.3, 0.3), WeightPath::kDirect),
      std::invalid_argument);
}

TEST_CASE("degrees beyond the factorial cache are rejected") {
  CHECK_THROWS_AS(cs::univariate_weights(OperatorParams(5000, 0.1), 0.5), std::invalid_argument);
}
