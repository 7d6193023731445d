#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blockq/grid.hpp"

namespace blockq {

struct DiffFixture {
  int k_a = 0, k_b = 0;
  Position offset;
  int delta = 0;
  int size = 0;  // square grid side for game a; game b gets the offset on top
  std::vector<std::string> regions;
};

struct FabricFixture {
  int k_a = 0, k_b = 0;
  std::string region;
};

// Hand-picked region windows keyed by (k, region name), plus the diff and
// fabric-class configurations that use them.
struct Fixtures {
  int version = 0;
  std::map<std::pair<int, std::string>, Window> windows;
  int thread_gap = 3;
  std::vector<DiffFixture> diffs;
  std::vector<FabricFixture> fabric_classes;

  bool has(int k, const std::string& region) const { return windows.count({k, region}) != 0; }
  // Throws UsageError for an unknown (k, region).
  Window window(int k, const std::string& region) const;
};

// Throws FormatError on malformed JSON or windows.
Fixtures parse_fixtures(const std::string& text);
Fixtures load_fixtures(const std::filesystem::path& path);

}  // namespace blockq
