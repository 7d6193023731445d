#pragma once

#include <cstdint>
#include <vector>

#include "blockq/grid.hpp"
#include "blockq/solver.hpp"

namespace blockq {

// CA state = palace number - k; negative exactly at palaces.
using CaState = std::int32_t;

// The six predecessors of target g = (x, y), in game coordinates:
//   a (x-2,y-2)  b (x-1,y-2)
//   c (x-2,y-1)  d (x-1,y-1)  e (x,y-1)
//                f (x-1,y)    g
struct CaNeighborhood {
  CaState a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  friend bool operator==(const CaNeighborhood&, const CaNeighborhood&) = default;
};

// Palace compensation weights, added for each neighbor whose state is negative.
struct CompensationTable {
  static constexpr int a = 3;
  static constexpr int b = -2;
  static constexpr int c = -2;
  static constexpr int d = -1;
  static constexpr int e = 1;
  static constexpr int f = 1;
};

// Compensation from b..f only (a excluded).
int compensation_bcdef(CaState b, CaState c, CaState d, CaState e, CaState f);

// g = a - b - c + e + f + p, p the sum of triggered compensations.
CaState ca_local_rule(const CaNeighborhood& n);

// Fixed state outside the game quadrant: k where both coordinates are
// negative, 0 where exactly one is. Throws UsageError for x, y >= 0.
CaState initial_state(GameParams params, int x, int y);

// Runs the rule over the game quadrant in raster (or wavefront) order and
// returns states + k as palace numbers.
PalaceGrid run_ca(GameParams params, int width, int height, SolveOptions opts = {});

// All values of a consistent with b..g under the forward rule: a + p_a equals
// R = g - f - e + c + b - p_bcdef, so a = R when R >= 3, a = R - 3 when R < 0,
// and either when R is 0, 1 or 2. Sorted descending.
std::vector<CaState> reverse_cell(CaState b, CaState c, CaState d, CaState e, CaState f,
                                  CaState g);

// Rule-order neighborhood of (x, y) read from a computed grid, with boundary
// values supplied for out-of-quadrant reads.
CaNeighborhood neighborhood_at(const PalaceGrid& grid, int x, int y);

}  // namespace blockq
