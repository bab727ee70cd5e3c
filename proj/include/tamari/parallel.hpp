#pragma once

#include <cstddef>

namespace tamari {

/// Execution policy for the verification sweeps.  Every sweep has a serial
/// path (the reference) and an OpenMP path over independent items; both must
/// produce identical results, which the test suite checks.
enum class Exec { serial, parallel };

template <class F>
void par_for(std::size_t count, Exec exec, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace tamari
