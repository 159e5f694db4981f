#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace topolab {

// Applies fn(i) for i in [0, count) across `workers` threads and returns the
// results in index order. Output is independent of the worker count: items
// are assigned statically and merged by index.
template <typename R>
std::vector<R> parallel_map_ordered(std::size_t count, int workers,
                                    const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::size_t nw = std::min<std::size_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += nw) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace topolab
