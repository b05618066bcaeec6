// Implementation of sweep; included from parallel.hpp.

#include <exception>
#include <omp.h>

namespace higgins {

  template <typename T, typename F>
  std::vector<T> sweep(std::size_t n, Execution exec, F&& f) {
    std::vector<std::vector<T>> per_index(n);
    if (!exec.parallel || n < 2) {
      for (std::size_t i = 0; i < n; ++i) {
        f(i, per_index[i]);
      }
    } else {
      int                jobs = exec.jobs > 0 ? exec.jobs : default_jobs();
      std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
      for (std::size_t i = 0; i < n; ++i) {
        try {
          f(i, per_index[i]);
        } catch (...) {
#pragma omp critical(higgins_sweep_error)
          if (!error) {
            error = std::current_exception();
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }
    std::vector<T> out;
    for (auto& v : per_index) {
      for (auto& x : v) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

}  // namespace higgins
