#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "blockq/grid.hpp"

namespace blockq {

// BQG1 layout, all little-endian, no padding:
//   "BQG1" | u32 k | u32 width | u32 height | i32 value[width*height]
// Values are row-major: row y, then column x.
inline constexpr char kGridMagic[4] = {'B', 'Q', 'G', '1'};
inline constexpr std::size_t kGridHeaderSize = 16;
inline constexpr std::uint64_t kMaxGridCells = 0x7fff'ffff;

// Throws ResourceError for grids above kMaxGridCells.
std::vector<std::uint8_t> write_grid(const PalaceGrid& grid);

// Throws FormatError (with the failing byte offset) on bad magic, a zero or
// oversized dimension, more than kMaxGridCells cells, or a payload whose length is not width*height values.
PalaceGrid read_grid(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

PalaceGrid load_grid(const std::filesystem::path& path);
void save_grid(const std::filesystem::path& path, const PalaceGrid& grid);

}  // namespace blockq
