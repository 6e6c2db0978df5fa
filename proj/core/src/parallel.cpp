#include "lrlab/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace lrlab {

namespace {

std::atomic<unsigned> g_workers{1};
thread_local bool t_in_worker = false;

}  // namespace

void set_worker_count(unsigned k) { g_workers.store(std::max(1U, k)); }

unsigned worker_count() noexcept { return g_workers.load(); }

namespace detail {

bool inside_worker() noexcept { return t_in_worker; }

void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1 || t_in_worker) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      t_in_worker = true;
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
}

}  // namespace detail

}  // namespace lrlab
