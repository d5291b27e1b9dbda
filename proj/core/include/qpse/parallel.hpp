#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qpse {

// Worker-thread cap: QPSE_THREADS env var if set (>=1), else hardware count.
std::size_t thread_budget();

namespace detail {

// Runs body(begin, end) over disjoint chunks of [0, n), possibly on several
// threads. Chunk boundaries are fixed by n alone, never by the thread count.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& body);

inline constexpr std::size_t kSumBlock = std::size_t{1} << 15;

}  // namespace detail

// Elementwise parallel loop; body(i0, i1) handles indices [i0, i1).
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  detail::parallel_chunks(n, std::function<void(std::size_t, std::size_t)>(
                                 std::forward<Body>(body)));
}

// Deterministic reduction: per-block partial sums are accumulated in block
// order, so the result is bit-identical for any thread count.
template <class Term>
double blocked_sum(std::size_t n, Term term) {
  const std::size_t nblocks = (n + detail::kSumBlock - 1) / detail::kSumBlock;
  if (nblocks <= 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += term(i);
    return s;
  }
  std::vector<double> partial(nblocks, 0.0);
  detail::parallel_chunks(nblocks, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      const std::size_t i0 = b * detail::kSumBlock;
      const std::size_t i1 = std::min(n, i0 + detail::kSumBlock);
      double s = 0.0;
      for (std::size_t i = i0; i < i1; ++i) s += term(i);
      partial[b] = s;
    }
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace qpse
