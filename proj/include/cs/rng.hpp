#pragma once

#include <cstdint>
#include <utility>

#include "cs/core.hpp"

namespace cs {

// splitmix64. All scan randomness flows through this generator so that
// reports reproduce bit for bit from a seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit resolution
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Trial i of a scan draws from splitmix64 seeded with (seed XOR i). The
// mixer decorrelates neighbouring trial seeds, and serial and parallel
// execution therefore see exactly the same samples.
inline SplitMix64 trial_rng(std::uint64_t seed, std::int64_t trial) {
  return SplitMix64(seed ^ static_cast<std::uint64_t>(trial));
}

// Uniform point of S (sort-based simplex sampling).
SimplexPoint sample_simplex(SplitMix64& rng);

// Independent pair, both uniform on S.
std::pair<SimplexPoint, SimplexPoint> sample_pair(SplitMix64& rng);

// Componentwise-ordered pair u <= v, built from the componentwise min/max of
// an independent pair; the max can leave S, in which case both are redrawn.
std::pair<SimplexPoint, SimplexPoint> sample_ordered_pair(SplitMix64& rng);

// Pair (u, v) with u + v still in S, by rejection.
std::pair<SimplexPoint, SimplexPoint> sample_summable_pair(SplitMix64& rng);

}  // namespace cs
