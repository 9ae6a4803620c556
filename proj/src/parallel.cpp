#include "keycrystal/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kc {

int thread_count() {
  if (const char* s = std::getenv("KEYCRYSTAL_THREADS")) {
    try {
      int n = std::stoi(s);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace kc
