#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <type_traits>
#include <vector>

namespace envyic {

/// Serial is the reference path; Parallel runs the same per-index work on
/// OpenMP threads. Both produce identical results.
enum class Execution { Serial, Parallel };

/// out[k] = fn(k) for k < count. fn must not touch shared mutable state.
template <class Fn>
auto indexed_map(std::size_t count, Execution execution, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> out(count);
  if (execution == Execution::Serial) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < total; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace envyic
