#include "qpse/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qpse {

std::size_t thread_budget() {
  static const std::size_t budget = [] {
    if (const char* env = std::getenv("QPSE_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<std::size_t>(hw > 0 ? hw : 1);
  }();
  return budget;
}

namespace detail {

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t nthreads = std::min(thread_budget(), n);
  if (nthreads <= 1 || n < 4) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t per = n / nthreads;
  const std::size_t extra = n % nthreads;
  std::size_t begin = 0;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t len = per + (t < extra ? 1 : 0);
    const std::size_t end = begin + len;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail
}  // namespace qpse
