#pragma once

#include <algorithm>
#include <barrier>
#include <thread>
#include <vector>

namespace blockq::detail {

// Visits every cell of a width x height grid so that all cells on
// anti-diagonal s = x + y are visited before any cell on s + 1. Cells on one
// anti-diagonal are split across `threads` workers; `visit(x, y)` must only
// read cells from earlier anti-diagonals and write state no other cell on
// the same anti-diagonal touches.
template <typename Visit>
void for_each_antidiagonal(int width, int height, int threads, Visit&& visit) {
  const int diagonals = width + height - 1;
  auto span_of = [&](int s, int& y_lo, int& y_hi) {
    y_lo = std::max(0, s - (width - 1));
    y_hi = std::min(s, height - 1);
  };
  if (threads <= 1) {
    for (int s = 0; s < diagonals; ++s) {
      int y_lo, y_hi;
      span_of(s, y_lo, y_hi);
      for (int y = y_hi; y >= y_lo; --y) visit(s - y, y);
    }
    return;
  }
  std::barrier sync(threads);
  auto worker = [&](int id) {
    for (int s = 0; s < diagonals; ++s) {
      int y_lo, y_hi;
      span_of(s, y_lo, y_hi);
      const int n = y_hi - y_lo + 1;
      const int begin = y_lo + static_cast<int>(static_cast<long long>(n) * id / threads);
      const int end = y_lo + static_cast<int>(static_cast<long long>(n) * (id + 1) / threads);
      for (int y = begin; y < end; ++y) visit(s - y, y);
      sync.arrive_and_wait();
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (int id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
}

}  // namespace blockq::detail
