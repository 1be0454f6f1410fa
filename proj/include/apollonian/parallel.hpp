#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace apollonian {

/// Kernels come in two flavors: the OpenMP loop and the plain serial loop
/// kept as the reference. Results must be identical either way.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, n). With Execution::parallel and OpenMP
/// available the iterations are spread over threads; any exception thrown by
/// an iteration is captured and the one from the lowest index is rethrown
/// after the loop, so error reporting does not depend on scheduling.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  std::mutex guard;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (static_cast<std::size_t>(i) < first_index) {
        first_index = static_cast<std::size_t>(i);
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace apollonian
