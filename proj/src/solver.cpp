#include "blockq/solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "blockq/errors.hpp"
#include "wavefront.hpp"

namespace blockq {

std::vector<Position> options(Position pos) {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(pos.x + pos.y + std::min(pos.x, pos.y)));
  for (int x = pos.x - 1; x >= 0; --x) out.push_back({x, pos.y});
  for (int y = pos.y - 1; y >= 0; --y) out.push_back({pos.x, y});
  for (int t = 1; t <= std::min(pos.x, pos.y); ++t) out.push_back({pos.x - t, pos.y - t});
  return out;
}

PalaceGrid solve_grid(GameParams params, int width, int height, SolveOptions opts) {
  if (opts.threads <= 1) return solve_grid_streaming(params, width, height);

  // Full diagonal index x - y + height - 1: the wavefront keeps diagonals from
  // many rows alive at once, so the streaming ring cannot be shared here.
  const int k = params.k;
  auto values = allocate_cells(width, height);
  std::vector<std::int32_t> cols(width, 0), rows(height, 0), diags(width + height - 1, 0);
  detail::for_each_antidiagonal(width, height, opts.threads, [&](int x, int y) {
    const int d = x - y + height - 1;
    const PalaceNumber v = cols[x] + rows[y] + diags[d];
    values[static_cast<std::size_t>(y) * width + x] = v;
    if (v < k) {
      ++cols[x];
      ++rows[y];
      ++diags[d];
    }
  });
  return PalaceGrid(k, width, height, std::move(values));
}

bool is_palace(const PalaceGrid& grid, Position pos) { return grid.at(pos) < grid.k(); }

DirectionCounters::DirectionCounters(int width) : col_counts(width, 0), diag_counts(width, 0) {}

std::size_t DirectionCounters::diag_slot(int x, int y) const {
  const auto w = static_cast<long long>(col_counts.size());
  long long d = (static_cast<long long>(x) - y) % w;
  if (d < 0) d += w;
  return static_cast<std::size_t>(d);
}

RowStream::RowStream(GameParams params, int width)
    : k_(params.k), width_(width), counters_(width < 1 ? 1 : width) {
  if (width < 1) throw UsageError("stream width must be >= 1");
}

const std::vector<PalaceNumber>& RowStream::next(std::vector<PalaceNumber>& out) {
  out.resize(width_);
  auto& c = counters_;
  // The diagonal starting at (0, y) replaces the one that ended at
  // (width-1, y-1); both map to the same slot.
  c.diag_counts[c.diag_slot(0, y_)] = 0;
  c.row_count = 0;
  std::size_t slot = c.diag_slot(0, y_);
  const std::size_t w = static_cast<std::size_t>(width_);
  for (int x = 0; x < width_; ++x) {
    const PalaceNumber v = c.col_counts[x] + c.row_count + c.diag_counts[slot];
    out[x] = v;
    if (v < k_) {
      ++c.col_counts[x];
      ++c.row_count;
      ++c.diag_counts[slot];
    }
    if (++slot == w) slot = 0;
  }
  ++y_;
  return out;
}

std::vector<PalaceNumber> RowStream::next() {
  std::vector<PalaceNumber> out;
  next(out);
  return out;
}

PalaceGrid solve_grid_streaming(GameParams params, int width, int height) {
  auto values = allocate_cells(width, height);
  RowStream stream(params, width);
  std::vector<PalaceNumber> row;
  for (int y = 0; y < height; ++y) {
    stream.next(row);
    std::copy(row.begin(), row.end(), values.begin() + static_cast<std::ptrdiff_t>(y) * width);
  }
  return PalaceGrid(params.k, width, height, std::move(values));
}

}  // namespace blockq
