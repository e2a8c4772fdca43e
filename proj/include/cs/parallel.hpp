#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cs::par {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) once for every i in [0, count). threads == 1 is the serial
// reference path; threads == 0 uses the OpenMP default team size; any other
// value pins the team. fn must write only to state owned by index i, so the
// result is identical for every thread count.
template <class Fn>
void parallel_index(std::int64_t count, int threads, Fn&& fn) {
  if (count <= 0) return;
#ifdef _OPENMP
  if (threads != 1 && count > 1) {
    const int team = threads > 0 ? threads : omp_get_max_threads();
    if (team > 1) {
#pragma omp parallel for schedule(static) num_threads(team)
      for (std::int64_t i = 0; i < count; ++i) {
        fn(i);
      }
      return;
    }
  }
#else
  (void)threads;
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    fn(i);
  }
}

}  // namespace cs::par
