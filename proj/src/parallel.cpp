#include "lieflow/parallel.hpp"

#include <cstdlib>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieflow {
namespace {

int read_thread_cap() {
#ifdef _OPENMP
  int cap = omp_get_max_threads();
#else
  int cap = 1;
#endif
  if (const char* env = std::getenv("LIEFLOW_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0 && requested < cap) cap = requested;
  }
  return cap;
}

}  // namespace

int max_threads() {
  static int cap = read_thread_cap();
  return cap;
}

namespace detail {

void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
#ifdef _OPENMP
  const int threads = max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(ctx, static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail
}  // namespace lieflow
