#include "mexlet/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace mexlet {

int max_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("NEEDLET_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1 && cap < hw) hw = static_cast<int>(cap);
  }
  return hw;
}

void parallel_for_threads(std::size_t n, int nt,
                          const std::function<void(std::size_t)>& f) {
  if (nt <= 1 || n < 2 * static_cast<std::size_t>(nt)) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += nt) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  parallel_for_threads(n, max_threads(), f);
}

}  // namespace mexlet
