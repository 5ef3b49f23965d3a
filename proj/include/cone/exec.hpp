#ifndef CONE_EXEC_HPP_
#define CONE_EXEC_HPP_

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cone {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// path and an OpenMP path that produce identical results; reductions are
// deterministic for any thread count because partial sums are accumulated
// per fixed index slab and combined in slab order.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

// Parallel loop over [lo, hi); body(i) must be independent across i.
template <class F>
inline void parallel_for(long lo, long hi, Exec exec, F&& body) {
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long i = lo; i < hi; ++i) body(i);
    return;
#endif
  }
  for (long i = lo; i < hi; ++i) body(i);
}

// Deterministic sum of per-slab partials: partial(i) accumulates slab i's
// contribution serially; slabs are summed in index order afterwards.
template <class F>
inline double reduce_slabs(long nslabs, Exec exec, F&& partial) {
  std::vector<double> acc(static_cast<size_t>(nslabs > 0 ? nslabs : 0), 0.0);
  parallel_for(0, nslabs, exec, [&](long i) { acc[static_cast<size_t>(i)] = partial(i); });
  double total = 0.0;
  for (double a : acc) total += a;
  return total;
}

}  // namespace cone

#endif  // CONE_EXEC_HPP_
