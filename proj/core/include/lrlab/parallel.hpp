#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace lrlab {

/// Worker count for parallel sweeps and tensor powers (default 1).
void set_worker_count(unsigned k);
unsigned worker_count() noexcept;

namespace detail {
bool inside_worker() noexcept;
void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);
}  // namespace detail

/// Evaluates fn(0..count-1) on up to worker_count() threads and returns the
/// results in index order, so the output never depends on scheduling.
/// Calls made from inside a worker run serially. The first exception (by
/// index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  detail::run_indexed(count, [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace lrlab
