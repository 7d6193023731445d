#pragma once

#include <cstdint>
#include <vector>

#include "blockq/grid.hpp"

namespace blockq {

// Moves available to a queen at `pos` on an empty board: due west, due
// north, and north-west. Order: west (x-1 down to 0), north (y-1 down to 0),
// then diagonal (t = 1..min(x,y)).
std::vector<Position> options(Position pos);

struct SolveOptions {
  // Worker count for the anti-diagonal wavefront; results never depend on it.
  int threads = 1;
};

// Palace numbers by the direct three-direction count: a cell's value is the
// number of palaces (value < k) strictly north, west and north-west of it.
PalaceGrid solve_grid(GameParams params, int width, int height, SolveOptions opts = {});

// True iff `pos` is a P-position of the game, i.e. its palace number is < k.
bool is_palace(const PalaceGrid& grid, Position pos);

// Palace counts visible along each direction at the current raster front.
// Diagonal counters form a ring of `width` slots indexed by (x - y) mod width:
// the diagonal entering at column 0 of a new row reuses the slot of the one
// that left the grid through the last column of the previous row.
struct DirectionCounters {
  std::vector<std::int32_t> col_counts;
  std::vector<std::int32_t> diag_counts;
  std::int32_t row_count = 0;

  explicit DirectionCounters(int width);

  std::size_t diag_slot(int x, int y) const;
};

// Produces a game's rows top to bottom with O(width) state. The first h rows
// equal solve_grid(params, width, h) exactly. Single consumer.
class RowStream {
 public:
  RowStream(GameParams params, int width);

  int k() const { return k_; }
  int width() const { return width_; }
  // Index of the row the next call to next() yields.
  int next_row() const { return y_; }

  // Computes the next row into `out` (resized to width) and returns it.
  const std::vector<PalaceNumber>& next(std::vector<PalaceNumber>& out);
  std::vector<PalaceNumber> next();

  const DirectionCounters& counters() const { return counters_; }

 private:
  int k_;
  int width_;
  int y_ = 0;
  DirectionCounters counters_;
};

// Convenience: stream `height` rows into a grid.
PalaceGrid solve_grid_streaming(GameParams params, int width, int height);

}  // namespace blockq
