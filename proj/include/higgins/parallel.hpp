// Execution policy for the sweeps in the verifiers and the certifier.
// Every sweep has a plain serial loop kept as the reference, and an OpenMP
// loop whose per-thread results are merged in a fixed order.

#ifndef HIGGINS_PARALLEL_HPP_
#define HIGGINS_PARALLEL_HPP_

#include <cstddef>
#include <vector>

namespace higgins {

  struct Execution {
    bool parallel = false;
    int  jobs     = 0;  // 0: use default_jobs()

    static Execution serial() {
      return {false, 1};
    }
    static Execution threads(int jobs = 0) {
      return {true, jobs};
    }
  };

  // HIGGINS_JOBS if set to a positive integer, otherwise the OpenMP default.
  int default_jobs();

  // Calls f(i, out) for i in [0, n), where out is a per-thread vector of
  // results; returns the concatenation of the per-index outputs in index
  // order, so the result does not depend on scheduling.
  template <typename T, typename F>
  std::vector<T> sweep(std::size_t n, Execution exec, F&& f);

}  // namespace higgins

#include "higgins/parallel.tpp"

#endif  // HIGGINS_PARALLEL_HPP_
