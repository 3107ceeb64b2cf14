#include "vss/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vss::par {

namespace {

int compute_budget() {
#ifdef _OPENMP
  int budget = omp_get_max_threads();
#else
  int budget = 1;
#endif
  if (const char* env = std::getenv("VSS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) budget = std::min<long>(budget, v);
  }
  return budget < 1 ? 1 : budget;
}

}  // namespace

int thread_budget() {
  static const int budget = compute_budget();
  return budget;
}

bool enabled() {
#ifdef _OPENMP
  return thread_budget() > 1;
#else
  return false;
#endif
}

void parallel_for_impl(int n, const void* ctx, void (*fn)(const void*, int)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (int i = 0; i < n; ++i) fn(ctx, i);
#else
  for (int i = 0; i < n; ++i) fn(ctx, i);
#endif
}

}  // namespace vss::par
