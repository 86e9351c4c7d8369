#include "thinlayer/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace thinlayer {

int worker_count() {
  if (const char* env = std::getenv("THINLAYER_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_rows(int begin, int end, const std::function<void(int)>& body) {
  const int rows = end - begin;
  if (rows <= 0) return;
  const int workers = std::min(worker_count(), rows);
  if (workers <= 1 || rows < 64) {
    for (int r = begin; r < end; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + rows * w / workers;
    const int hi = begin + rows * (w + 1) / workers;
    pool.emplace_back([lo, hi, &body] {
      for (int r = lo; r < hi; ++r) body(r);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace thinlayer
