#include "dsrg/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace dsrg {

namespace {

std::atomic<unsigned> g_thread_count{0};
std::once_flag g_env_once;

unsigned resolve(unsigned raw) {
  if (raw == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  return raw;
}

void init_from_env() {
  const char* env = std::getenv("DSRG_THREADS");
  if (env != nullptr) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n >= 0 && n < 4096) {
      g_thread_count.store(static_cast<unsigned>(n == 0 ? 0 : n));
      return;
    }
  }
  g_thread_count.store(1);
}

}  // namespace

void set_thread_count(unsigned n) {
  std::call_once(g_env_once, init_from_env);
  g_thread_count.store(n);
}

unsigned thread_count() {
  std::call_once(g_env_once, init_from_env);
  return resolve(g_thread_count.load());
}

void parallel_for_rows(std::size_t n,
                       const std::function<void(std::size_t, std::size_t)>& fn) {
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2 * workers || n < 64) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    std::size_t end = begin + chunk < n ? begin + chunk : n;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace dsrg
