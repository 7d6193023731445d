#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace blockq {

using PalaceNumber = std::int32_t;

struct GameParams {
  // Blocking number; the blocking player owns k-1 pawns.
  int k = 1;

  explicit GameParams(int k_in);
};

// (0,0) is the upper-left corner, x grows rightward, y grows downward.
struct Position {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

// Half-open rectangle [x0,x1) x [y0,y1).
struct Window {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  bool contains(Position p) const { return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1; }

  friend bool operator==(const Window&, const Window&) = default;
};

// Zero-filled storage for width*height cells. Throws UsageError for empty
// dimensions and ResourceError when the grid cannot be addressed or allocated.
std::vector<PalaceNumber> allocate_cells(int width, int height);

// Palace numbers of one game over a width x height window anchored at the
// origin, stored row-major. Immutable once built.
class PalaceGrid {
 public:
  PalaceGrid(int k, int width, int height, std::vector<PalaceNumber> values);

  int k() const { return k_; }
  int width() const { return width_; }
  int height() const { return height_; }

  bool contains(Position p) const {
    return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_;
  }

  PalaceNumber operator()(int x, int y) const {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  PalaceNumber at(Position p) const;  // bounds-checked, throws UsageError

  // CA state: palace number minus k. Negative exactly at palaces.
  std::int32_t state(int x, int y) const { return (*this)(x, y) - k_; }
  bool palace(int x, int y) const { return (*this)(x, y) < k_; }

  std::span<const PalaceNumber> values() const { return values_; }
  std::span<const PalaceNumber> row(int y) const {
    return std::span<const PalaceNumber>(values_).subspan(static_cast<std::size_t>(y) * width_,
                                                          width_);
  }

  Window bounds() const { return {0, 0, width_, height_}; }

  friend bool operator==(const PalaceGrid&, const PalaceGrid&) = default;

 private:
  int k_;
  int width_;
  int height_;
  std::vector<PalaceNumber> values_;
};

// Throws UsageError unless `w` is non-empty and inside `grid`.
void require_window(const PalaceGrid& grid, const Window& w);

}  // namespace blockq
