#pragma once

#include <cstddef>

namespace lieflow {

/// Execution policy for the data-parallel kernels. Every kernel writes
/// per-index slots and reduces in serial index order afterwards, so the two
/// policies produce bitwise-identical results; `serial` is the reference
/// implementation kept for testing and benchmarking.
enum class Exec { serial, parallel };

/// Worker cap: min(OpenMP default, LIEFLOW_THREADS when set and positive).
int max_threads();

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

template <typename F>
void parallel_for(std::size_t n, Exec exec, F&& body) {
  if (exec == Exec::serial || max_threads() <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  auto thunk = [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); };
  detail::parallel_for_impl(n, &body, thunk);
}

}  // namespace lieflow
