#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blockq/analysis.hpp"
#include "blockq/grid.hpp"

namespace blockq {

using Rgb = std::array<std::uint8_t, 3>;

// Colors by CA state (value - k). States below `lowest` share the first
// entry and states above `lowest + colors.size() - 1` share the last.
struct Palette {
  int lowest = -5;
  std::vector<Rgb> colors;

  Rgb operator()(std::int32_t state) const;

  // <=-5 dark brown, -4 dark olive, -3 olive, -2 light olive, -1 yellow,
  // 0 black, 1 blue, >=2 indigo.
  static Palette classic();
  // Throws UsageError for unknown names.
  static Palette named(const std::string& name);
};

using Bytes = std::vector<std::uint8_t>;

// Binary PPM (P6), one pixel per cell.
Bytes render_image(const PalaceGrid& grid, const Palette& palette = Palette::classic());

// Overlap of a diff: mismatches white, matches colored from grid a's state.
Bytes render_mask(const DiffReport& report, const Palette& palette = Palette::classic());

}  // namespace blockq
