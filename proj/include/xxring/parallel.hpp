#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <utility>
#include <vector>

namespace xxring {

/// Runs body(i) for i in [0, n), optionally across OpenMP threads. Each index
/// must write only its own output slot; with that discipline the parallel
/// and serial paths produce bitwise-identical results. Exceptions thrown by
/// the body are captured and the first one (lowest index) is rethrown after
/// the loop joins.
template <typename F>
void for_each_index(std::size_t n, bool parallel, F&& body) {
  std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace xxring
