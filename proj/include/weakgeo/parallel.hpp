#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace weakgeo {

/// WEAKGEO_WORKERS, defaulting to the available parallelism.
inline unsigned worker_count() {
  if (const char* env = std::getenv("WEAKGEO_WORKERS")) {
    const long n = std::atol(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Run body(local, i) over i in [0, n), partitioned into contiguous chunks
/// across workers. The per-chunk accumulators come back in chunk order, so
/// any order-respecting merge is independent of the worker count.
template <class Local, class Body>
std::vector<Local> run_chunked(std::size_t n, Body&& body) {
  const unsigned workers = worker_count();
  const std::size_t chunks = std::min<std::size_t>(workers, n ? n : 1);
  std::vector<Local> locals(chunks);
  if (chunks <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(locals[0], i);
    return locals;
  }
  std::vector<std::thread> pool;
  const std::size_t per = (n + chunks - 1) / chunks;
  for (std::size_t c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      const std::size_t lo = c * per, hi = std::min(n, lo + per);
      for (std::size_t i = lo; i < hi; ++i) body(locals[c], i);
    });
  }
  for (auto& t : pool) t.join();
  return locals;
}

}  // namespace weakgeo
