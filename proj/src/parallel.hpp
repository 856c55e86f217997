#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "zono/execution.hpp"

namespace zono::detail {

// Runs body(i) for i in [0, n). Exceptions thrown by any iteration are
// captured and the first one is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body &&body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

} // namespace zono::detail
