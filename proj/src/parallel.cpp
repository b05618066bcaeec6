#include "higgins/parallel.hpp"

#include <cstdlib>
#include <string>

namespace higgins {

  int default_jobs() {
    if (char const* env = std::getenv("HIGGINS_JOBS")) {
      try {
        int n = std::stoi(env);
        if (n > 0) {
          return n;
        }
      } catch (std::exception const&) {
      }
    }
    return omp_get_max_threads();
  }

}  // namespace higgins
