#include "blockq/render.hpp"

#include <algorithm>
#include <string>

#include "blockq/errors.hpp"

namespace blockq {

namespace {

Bytes ppm_header(int width, int height) {
  const std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  return Bytes(header.begin(), header.end());
}

void put(Bytes& out, const Rgb& c) { out.insert(out.end(), c.begin(), c.end()); }

}  // namespace

Rgb Palette::operator()(std::int32_t state) const {
  const auto last = static_cast<std::int64_t>(colors.size()) - 1;
  const auto i = std::clamp<std::int64_t>(static_cast<std::int64_t>(state) - lowest, 0, last);
  return colors[static_cast<std::size_t>(i)];
}

Palette Palette::classic() {
  return {-5,
          {{92, 51, 23},
           {85, 107, 47},
           {128, 128, 0},
           {176, 196, 72},
           {255, 223, 0},
           {0, 0, 0},
           {40, 60, 255},
           {75, 0, 130}}};
}

Palette Palette::named(const std::string& name) {
  if (name == "classic") return classic();
  throw UsageError("unknown palette '" + name + "'");
}

Bytes render_image(const PalaceGrid& grid, const Palette& palette) {
  Bytes out = ppm_header(grid.width(), grid.height());
  out.reserve(out.size() + 3 * grid.values().size());
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x) put(out, palette(grid.state(x, y)));
  return out;
}

Bytes render_mask(const DiffReport& report, const Palette& palette) {
  Bytes out = ppm_header(report.overlap.width(), report.overlap.height());
  out.reserve(out.size() + 3 * report.mismatch.size());
  constexpr Rgb white{255, 255, 255};
  for (std::size_t i = 0; i < report.mismatch.size(); ++i)
    put(out, report.mismatch[i] ? white : palette(report.base_states[i]));
  return out;
}

}  // namespace blockq
