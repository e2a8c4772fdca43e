#include "cs/rng.hpp"

#include <algorithm>

namespace cs {

SimplexPoint sample_simplex(SplitMix64& rng) {
  double a = rng.u01();
  double b = rng.u01();
  if (a > b) std::swap(a, b);
  return SimplexPoint(a, b - a);
}

std::pair<SimplexPoint, SimplexPoint> sample_pair(SplitMix64& rng) {
  SimplexPoint x = sample_simplex(rng);
  SimplexPoint y = sample_simplex(rng);
  return {x, y};
}

std::pair<SimplexPoint, SimplexPoint> sample_ordered_pair(SplitMix64& rng) {
  while (true) {
    const auto [x, y] = sample_pair(rng);
    const double lo1 = std::min(x.x1(), y.x1());
    const double lo2 = std::min(x.x2(), y.x2());
    const double hi1 = std::max(x.x1(), y.x1());
    const double hi2 = std::max(x.x2(), y.x2());
    if (hi1 + hi2 > 1.0) continue;  // the max pair left S; redraw
    return {SimplexPoint(lo1, lo2), SimplexPoint(hi1, hi2)};
  }
}

std::pair<SimplexPoint, SimplexPoint> sample_summable_pair(SplitMix64& rng) {
  while (true) {
    const auto [u, v] = sample_pair(rng);
    const double s1 = u.x1() + v.x1();
    const double s2 = u.x2() + v.x2();
    if (s1 + s2 > 1.0) continue;
    return {u, v};
  }
}

}  // namespace cs
