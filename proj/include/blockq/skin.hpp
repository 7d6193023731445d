#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockq/grid.hpp"

namespace blockq {

// Fibonacci numbers with f(0) = 0, f(1) = f(2) = 1.
std::int64_t fibonacci(int n);

// A sequence over {2, 3}.
using StepSequence = std::vector<int>;

// Applies {2 -> 23, 3 -> 233} `iterations` times. Throws UsageError on
// symbols other than 2 and 3.
StepSequence step_substitution(const StepSequence& seed, int iterations);

// True iff `needle` occurs as a contiguous block of `haystack`.
bool is_factor(const StepSequence& needle, const StepSequence& haystack);

// Smallest m <= max_iterations with `needle` a factor of
// step_substitution({2}, m), if any.
std::optional<int> factor_level(const StepSequence& needle, int max_iterations = 10);

StepSequence parse_steps(const std::string& text);
std::string format_steps(const StepSequence& steps);

// Columns of the top arm around its contact with outer space (palace number
// exactly k). For each captured column, `top` is the first row whose value
// differs from k, and `cells` holds `depth` values starting at that row.
struct SkinBand {
  int k = 1;
  int x_begin = 0;
  int depth = 0;
  std::vector<int> top;  // -1 where no contact was found
  std::vector<std::vector<std::int32_t>> cells;

  int x_end() const { return x_begin + static_cast<int>(top.size()); }
  bool has(int x) const;
  // Value at (x, y) when below the contact row; k above it (outer space);
  // nullopt if below the captured depth.
  std::optional<std::int32_t> value(int x, int y) const;
};

// Reads the band out of an existing grid. Contact rows are searched within
// [band.y0, band.y1).
SkinBand skin_band_from_grid(const PalaceGrid& grid, const Window& band, int depth = 64);

// Streams the game row by row without materializing the grid. Columns
// [x_begin, x_end) are captured; streaming stops once every column has its
// contact row plus `depth` rows, or at `max_rows`.
SkinBand capture_skin_band(int k, int x_begin, int x_end, int depth = 64, int max_rows = 1 << 20);

struct SkinMeasurement {
  int level = 0;                  // n, inferred from the horizontal thickness
  int x_begin = 0, x_end = 0;     // columns covered (outer-space contact)
  int y_begin = 0, y_end = 0;     // contact rows covered
  int vertical_thickness = 0;     // modal column run
  int emission_columns = 0;       // columns whose run is one longer
  int diagonal_thickness = 0;     // modal run along (1,1)
  int horizontal_thickness = 0;   // modal row run
  int horizontal_period = 0;      // columns per period of the step pattern
  int vertical_period = 0;        // steps (rows) per period
  StepSequence step_sequence;     // one period, least rotation
  int steps = 0;                  // steps in the segment

  // Whether the metrics equal the Fibonacci table for `level`.
  bool matches_fibonacci_table() const;
  // Whether the step period is a rotation of step_substitution({2}, level).
  bool matches_substitution() const;
};

struct SkinTransition {
  int from_level = 0;
  int to_level = 0;
  int x = 0;       // first contact column of the new level
  int extent = 0;  // x - k, horizontal distance from the shoulder
  int y = 0;
};

struct SkinAnalysis {
  std::vector<SkinMeasurement> measurements;
  std::vector<SkinTransition> transitions;
  StepSequence steps;          // every boundary step width, left to right
  int first_step_x = 0;
  bool all_steps_2_or_3 = false;
  std::string diagnostic;      // set when no skin was found
};

SkinAnalysis skin_analyze(const SkinBand& band);
SkinAnalysis skin_analyze(const PalaceGrid& grid, const Window& band);

}  // namespace blockq
