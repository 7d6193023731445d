#include "blockq/grid_io.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "blockq/errors.hpp"

namespace blockq {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[at + i]) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> write_grid(const PalaceGrid& grid) {
  if (grid.values().size() > kMaxGridCells)
    throw ResourceError("BQG1 holds at most " + std::to_string(kMaxGridCells) + " cells");
  std::vector<std::uint8_t> out;
  out.reserve(kGridHeaderSize + 4 * grid.values().size());
  out.insert(out.end(), std::begin(kGridMagic), std::end(kGridMagic));
  put_u32(out, static_cast<std::uint32_t>(grid.k()));
  put_u32(out, static_cast<std::uint32_t>(grid.width()));
  put_u32(out, static_cast<std::uint32_t>(grid.height()));
  for (PalaceNumber v : grid.values()) put_u32(out, static_cast<std::uint32_t>(v));
  return out;
}

PalaceGrid read_grid(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw FormatError("file shorter than the BQG1 magic", bytes.size());
  if (std::memcmp(bytes.data(), kGridMagic, 4) != 0) throw FormatError("bad magic, expected BQG1", 0);
  if (bytes.size() < kGridHeaderSize) throw FormatError("truncated BQG1 header", bytes.size());

  constexpr auto int_max = static_cast<std::uint32_t>(std::numeric_limits<int>::max());
  const std::uint32_t k = get_u32(bytes, 4);
  const std::uint32_t width = get_u32(bytes, 8);
  const std::uint32_t height = get_u32(bytes, 12);
  if (k == 0 || k > int_max) throw FormatError("k out of range: " + std::to_string(k), 4);
  if (width == 0 || width > int_max) throw FormatError("width out of range: " + std::to_string(width), 8);
  if (height == 0 || height > int_max)
    throw FormatError("height out of range: " + std::to_string(height), 12);

  const std::uint64_t expected = static_cast<std::uint64_t>(width) * height;
  if (expected > kMaxGridCells)
    throw FormatError("dimensions overflow: " + std::to_string(width) + "x" + std::to_string(height), 8);
  const std::uint64_t payload = bytes.size() - kGridHeaderSize;
  if (payload != expected * 4) {
    throw FormatError("payload holds " + std::to_string(payload / 4) +
                          (payload % 4 ? " values and a partial one" : " values") + ", expected " +
                          std::to_string(expected),
                      kGridHeaderSize + std::min<std::uint64_t>(payload, expected * 4) / 4 * 4);
  }

  std::vector<PalaceNumber> values(static_cast<std::size_t>(expected));
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = static_cast<PalaceNumber>(get_u32(bytes, kGridHeaderSize + 4 * i));
  return PalaceGrid(static_cast<int>(k), static_cast<int>(width), static_cast<int>(height),
                    std::move(values));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path.string() + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw UsageError("failed writing '" + path.string() + "'");
}

PalaceGrid load_grid(const std::filesystem::path& path) { return read_grid(read_file(path)); }

void save_grid(const std::filesystem::path& path, const PalaceGrid& grid) {
  write_file(path, write_grid(grid));
}

}  // namespace blockq
