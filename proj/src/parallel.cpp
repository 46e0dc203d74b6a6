#include "poincare/parallel.hpp"

#include <omp.h>

namespace poincare::parallel {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return omp_get_max_threads();
}

}  // namespace poincare::parallel
