#include "extremalkit/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace exk {

int max_threads() {
  static const int cached = [] {
    int threads = omp_get_max_threads();
    if (const char* env = std::getenv("EXTREMALKIT_THREADS")) {
      try {
        int cap = std::stoi(env);
        if (cap >= 1 && cap < threads) threads = cap;
      } catch (...) {
        // unparsable cap: keep the OpenMP default
      }
    }
    return threads < 1 ? 1 : threads;
  }();
  return cached;
}

}  // namespace exk
