// Serial-vs-OpenMP comparison for the hot kernels. Every pair of runs must
// also agree bit for bit, so this doubles as a determinism smoke check.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "cs/operators.hpp"
#include "cs/parallel.hpp"
#include "cs/scans.hpp"
#include "cs/weights.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void print_row(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-32s %10.2f ms %10.2f ms %6.2fx   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }

  // warm the factorial cache so the first timed run does not pay for it
  cs::bivariate_weights(cs::OperatorParams(50, 0.5), cs::SimplexPoint(0.2, 0.2),
                        cs::WeightPath::kLogSpace, 1);

  std::printf("threads available: %d\n\n", cs::par::hardware_threads());
  std::printf("%-32s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  bool all_identical = true;

  {
    const int n = quick ? 300 : 1000;
    const cs::OperatorParams params(n, 0.1);
    const cs::SimplexPoint x(0.3, 0.2);
    cs::BivariateWeights serial{params, x, {}, {}};
    cs::BivariateWeights parallel{params, x, {}, {}};
    const double ts = time_ms(
        [&] { serial = cs::bivariate_weights(params, x, cs::WeightPath::kLogSpace, 1); });
    const double tp = time_ms(
        [&] { parallel = cs::bivariate_weights(params, x, cs::WeightPath::kLogSpace, 0); });
    const bool same = serial.w == parallel.w;
    all_identical = all_identical && same;
    const std::string name = "weight table fill, n=" + std::to_string(n);
    print_row(name.c_str(), ts, tp, same);
  }

  {
    const int n = quick ? 300 : 1000;
    const cs::OperatorParams params(n, 0.1);
    const cs::SimplexPoint x(0.3, 0.2);
    const cs::FunctionDescriptor f = cs::FunctionDescriptor::exp_sum();
    double vs = 0.0;
    double vp = 0.0;
    const double ts =
        time_ms([&] { vs = cs::eval_G(f, params, x, cs::WeightPath::kLogSpace, 1); });
    const double tp =
        time_ms([&] { vp = cs::eval_G(f, params, x, cs::WeightPath::kLogSpace, 0); });
    const bool same = vs == vp;
    all_identical = all_identical && same;
    const std::string name = "eval_G expsum, n=" + std::to_string(n);
    print_row(name.c_str(), ts, tp, same);
  }

  {
    const int n = quick ? 40 : 100;
    const int points = quick ? 20 : 100;
    const cs::OperatorParams params(n, 10.0);
    cs::VerificationReport rs;
    cs::VerificationReport rp;
    const double ts = time_ms([&] { rs = cs::verify_partition(params, points, 42, 1e-12, 1); });
    const double tp = time_ms([&] { rp = cs::verify_partition(params, points, 42, 1e-12, 0); });
    const bool same = rs.to_json() == rp.to_json();
    all_identical = all_identical && same;
    const std::string name =
        "partition scan, n=" + std::to_string(n) + " x" + std::to_string(points);
    print_row(name.c_str(), ts, tp, same);
  }

  {
    const int pairs = quick ? 1000 : 10000;
    const cs::OperatorParams params(10, 0.3);
    const cs::FunctionDescriptor f = cs::FunctionDescriptor::abs_dist(0.5, 0.5, 1.0);
    const cs::LipschitzSpec spec(1.0, 1.0);
    cs::VerificationReport rs;
    cs::VerificationReport rp;
    const double ts = time_ms(
        [&] { rs = cs::verify_lipschitz_preservation(f, spec, params, pairs, 7, 1e-9, 1); });
    const double tp = time_ms(
        [&] { rp = cs::verify_lipschitz_preservation(f, spec, params, pairs, 7, 1e-9, 0); });
    const bool same = rs.to_json() == rp.to_json();
    all_identical = all_identical && same;
    const std::string name = "lipschitz scan, " + std::to_string(pairs) + " pairs";
    print_row(name.c_str(), ts, tp, same);
  }

  if (!all_identical) {
    std::printf("\nserial and parallel outputs diverged\n");
    return 1;
  }
  return 0;
}
