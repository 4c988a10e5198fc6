#include "spectile/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spectile {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("SPECTILE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

void parallel_chunks(size_t n, size_t chunk,
                     const std::function<void(size_t, size_t)>& fn) {
  if (n == 0) return;
  if (chunk == 0) chunk = 1;
  const size_t num_chunks = (n + chunk - 1) / chunk;
  const int workers = worker_count();
  if (workers == 1 || num_chunks == 1) {
    for (size_t c = 0; c < num_chunks; ++c)
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (;;) {
      const size_t c = next.fetch_add(1);
      if (c >= num_chunks) return;
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  const int k = std::min<size_t>(workers, num_chunks);
  pool.reserve(k - 1);
  for (int i = 1; i < k; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace spectile
