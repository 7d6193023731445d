#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "blockq/grid.hpp"
#include "blockq/report.hpp"

namespace blockq {

// Hood: value(x,y) = 2*min(x,y) + max(x,y) wherever that expression is <= k,
// palaces strictly below k, and the casing endpoints (shoulders and nose).
// Requires width and height > k.
Report hood_check(const PalaceGrid& grid);

// The left epaulette (below the casing, along x = 0) has periods (5,1) and
// (4,3) in grid coordinates; the upper one is its mirror image with periods
// (1,5) and (3,4).
enum class EpauletteSide { left, upper };

// Epaulette: invariance under both periods inside `window`, and the census
// {k-1: 5, k: 3, k+1: 3} over every run of 11 cells along a row (left) or
// column (upper), each a fundamental domain of the period lattice.
Report epaulette_check(const PalaceGrid& grid, const Window& window,
                       EpauletteSide side = EpauletteSide::left);

using Region = std::function<bool(Position)>;

// Census of value - k over the cells of `grid` inside `region`.
std::map<std::int32_t, std::int64_t> state_histogram(const PalaceGrid& grid, const Region& region);

Region hood_region(int k);         // 2*min + max <= k
Region beyond_hood_region(int k);  // 2*min + max > k
Region window_region(const Window& w);

struct Fraction {
  std::int64_t matched = 0;
  std::int64_t total = 0;

  double value() const { return total == 0 ? 1.0 : static_cast<double>(matched) / total; }
  bool perfect() const { return matched == total; }
};

// Comparison of b against a shifted by `offset` and raised by `delta`.
// Coordinates are grid a's; `overlap` is where both grids are defined.
struct DiffReport {
  Position offset;  // (dx, dy)
  int delta = 0;
  int k_a = 0, k_b = 0;
  Window overlap;
  std::vector<std::uint8_t> mismatch;    // row-major over overlap, 1 = differs
  std::vector<std::int32_t> base_states;  // grid a's states over overlap

  bool mismatch_at(int x, int y) const {
    return mismatch[static_cast<std::size_t>(y - overlap.y0) * overlap.width() + (x - overlap.x0)] != 0;
  }
  std::int64_t mismatches() const;
  // Throws UsageError unless `w` lies inside the overlap.
  Fraction match_fraction(const Window& w) const;
};

// Throws UsageError when the grids do not overlap under `offset`.
DiffReport diff_grids(const PalaceGrid& a, const PalaceGrid& b, Position offset, int delta);

// Solves games kA and kB (congruent mod 3) and asserts the fabric window of
// game kA reappears in game kB shifted by (kB-kA)/3 * (1,1), raised by kB-kA.
Report fabric_class_check(int k_a, int k_b, const Window& window);
Report fabric_class_check(const PalaceGrid& a, const PalaceGrid& b, const Window& window);

struct ThreadRecord {
  int id = 0;
  int x_begin = 0;  // first column
  std::vector<int> counts;  // palaces per column, from x_begin on
  std::vector<int> parents;  // threads merged into this one
  bool constant = false;
  bool fibonacci = false;  // constant count is a Fibonacci number
  bool split_from_parent = false;
};

// Groups palaces per column into clusters (consecutive palaces at most `gap`
// rows apart), links clusters within `gap` rows of each other across
// neighboring columns, and follows them as threads. Warp threads are steep
// dotted strings, so a gap of 1 would split them. Report-only: merges and
// splits start new threads.
std::vector<ThreadRecord> thread_thickness(const PalaceGrid& grid, const Window& warp, int gap = 3);
Report thread_report(const std::vector<ThreadRecord>& threads, int min_length = 8);

}  // namespace blockq
