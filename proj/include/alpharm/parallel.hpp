#pragma once

#include <exception>
#include <utility>

namespace alpharm {

/// Grid scans run either serially (reference path, kept for testing) or with
/// OpenMP. Results are written by index, so both paths produce bitwise
/// identical output.
enum class ExecMode { Serial, OpenMP };

/// Worker count for OpenMP regions: omp_get_max_threads(), capped by the
/// ALPHARM_THREADS environment variable when set.
int worker_threads();

namespace detail {
void omp_for_impl(int n, void* ctx, void (*body)(void*, int));
}

template <class F>
void parallel_for(int n, ExecMode mode, F&& body) {
  if (mode == ExecMode::Serial) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  F fn = std::forward<F>(body);
  detail::omp_for_impl(n, &fn, [](void* ctx, int i) { (*static_cast<F*>(ctx))(i); });
}

}  // namespace alpharm
