#include "blockq/grid.hpp"

#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "blockq/errors.hpp"

namespace blockq {

std::vector<PalaceNumber> allocate_cells(int width, int height) {
  if (width < 1 || height < 1) throw UsageError("grid dimensions must be >= 1");
  const auto cells = static_cast<unsigned long long>(width) * static_cast<unsigned long long>(height);
  if (cells > std::numeric_limits<std::size_t>::max() / sizeof(PalaceNumber))
    throw ResourceError("grid of " + std::to_string(cells) + " cells is not addressable");
  try {
    return std::vector<PalaceNumber>(static_cast<std::size_t>(cells));
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate a grid of " + std::to_string(cells) + " cells");
  } catch (const std::length_error&) {
    throw ResourceError("grid of " + std::to_string(cells) + " cells exceeds the vector limit");
  }
}

GameParams::GameParams(int k_in) : k(k_in) {
  if (k < 1) throw UsageError("blocking number k must be >= 1, got " + std::to_string(k));
}

PalaceGrid::PalaceGrid(int k, int width, int height, std::vector<PalaceNumber> values)
    : k_(k), width_(width), height_(height), values_(std::move(values)) {
  if (k < 1 || width < 1 || height < 1)
    throw UsageError("grid needs k, width, height >= 1");
  if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw UsageError("grid value count does not match width*height");
}

PalaceNumber PalaceGrid::at(Position p) const {
  if (!contains(p))
    throw UsageError("position (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                     ") outside " + std::to_string(width_) + "x" + std::to_string(height_) +
                     " grid");
  return (*this)(p.x, p.y);
}

void require_window(const PalaceGrid& grid, const Window& w) {
  if (w.x0 < 0 || w.y0 < 0 || w.x0 >= w.x1 || w.y0 >= w.y1 || w.x1 > grid.width() ||
      w.y1 > grid.height())
    throw UsageError("window [" + std::to_string(w.x0) + "," + std::to_string(w.y0) + "," +
                     std::to_string(w.x1) + "," + std::to_string(w.y1) +
                     ") is empty or outside the grid");
}

}  // namespace blockq
