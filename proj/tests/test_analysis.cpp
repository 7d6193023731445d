#include <doctest.h>

#include "blockq/analysis.hpp"
#include "blockq/errors.hpp"
#include "blockq/fixtures.hpp"
#include "blockq/solver.hpp"

using namespace blockq;

namespace {

const Fixtures& fixtures() {
  static const Fixtures f = load_fixtures(BLOCKQ_FIXTURES);
  return f;
}

// k = 1 grid whose palaces are exactly the listed cells.
PalaceGrid marked(int w, int h, const std::vector<Position>& palaces) {
  std::vector<PalaceNumber> values(static_cast<std::size_t>(w) * h, 1);
  for (auto p : palaces) values[static_cast<std::size_t>(p.y) * w + p.x] = 0;
  return PalaceGrid(1, w, h, std::move(values));
}

}  // namespace

TEST_CASE("hood formula, shoulders and nose") {
  for (int k : {5, 6, 100}) {
    const auto report = hood_check(solve_grid(GameParams(k), k + 40, k + 40));
    CAPTURE(k);
    CHECK(report.passed);
    CHECK(report.details["shoulder"][0] == nlohmann::json{k, 0});
  }
  const auto six = hood_check(solve_grid(GameParams(6), 20, 20));
  CHECK(six.details["nose"] == nlohmann::json{2, 2});
  CHECK(six.details["nose_exact"] == true);
  CHECK(hood_check(solve_grid(GameParams(5), 6, 6)).counters.at("hood_cells") > 0);
  CHECK_THROWS_AS(hood_check(solve_grid(GameParams(5), 5, 20)), UsageError);
}

TEST_CASE("hood check flags a corrupted cell") {
  const auto good = solve_grid(GameParams(5), 12, 12);
  std::vector<PalaceNumber> values(good.values().begin(), good.values().end());
  values[1 * 12 + 1] += 1;
  const auto report = hood_check(PalaceGrid(5, 12, 12, values));
  CHECK_FALSE(report.passed);
  REQUIRE(report.offenders.size() == 1);
  CHECK(report.offenders[0] == Position{1, 1});
}

TEST_CASE("epaulette periods and census on pinned windows") {
  const auto grid = solve_grid(GameParams(100), 200, 200);
  const auto left = epaulette_check(grid, fixtures().window(100, "epaulette_left"), EpauletteSide::left);
  CHECK(left.passed);
  CHECK(left.counters.at("tested_pairs") > 0);
  CHECK(left.counters.at("census_failures") == 0);
  CHECK(left.details["census"] == nlohmann::json{{"k-1", 5}, {"k", 3}, {"k+1", 3}, {"other", 0}});
  const auto upper = epaulette_check(grid, fixtures().window(100, "epaulette_upper"), EpauletteSide::upper);
  CHECK(upper.passed);
  // The left periods do not describe the upper epaulette.
  CHECK_FALSE(epaulette_check(grid, fixtures().window(100, "epaulette_upper"), EpauletteSide::left).passed);
  CHECK_FALSE(epaulette_check(grid, Window{0, 0, 30, 30}).passed);
}

TEST_CASE("degenerate epaulette window passes vacuously") {
  const auto grid = solve_grid(GameParams(100), 200, 200);
  const auto report = epaulette_check(grid, Window{20, 80, 21, 81});
  CHECK(report.passed);
  CHECK(report.counters.at("tested_pairs") == 0);
  CHECK(report.counters.at("census_domains") == 0);
  CHECK_THROWS_AS(epaulette_check(grid, Window{190, 190, 210, 210}), UsageError);
}

TEST_CASE("state histograms") {
  const auto grid = solve_grid(GameParams(5), 40, 40);
  const auto hood = state_histogram(grid, hood_region(5));
  REQUIRE_FALSE(hood.empty());
  CHECK(hood.begin()->first == -5);
  CHECK(hood.rbegin()->first == 0);
  CHECK(hood.size() == 6);
  CHECK(state_histogram(grid, [](Position) { return false; }).empty());
  const auto all = state_histogram(grid, window_region(grid.bounds()));
  std::int64_t total = 0;
  for (auto [s, c] : all) total += c;
  CHECK(total == 1600);
  const auto beyond = state_histogram(solve_grid(GameParams(60), 240, 240), beyond_hood_region(60));
  CHECK(beyond.begin()->first >= -4);
  CHECK(beyond.rbegin()->first <= 3);
}

TEST_CASE("diffs") {
  const auto a = solve_grid(GameParams(7), 50, 40);
  const auto self = diff_grids(a, a, {0, 0}, 0);
  CHECK(self.mismatches() == 0);
  CHECK(self.overlap == a.bounds());
  CHECK(self.match_fraction(a.bounds()).perfect());

  const auto b = solve_grid(GameParams(8), 50, 40);
  const auto d = diff_grids(a, b, {1, 0}, 1);
  CHECK(d.overlap == Window{0, 0, 49, 40});
  CHECK(d.mismatches() > 0);
  const auto f = d.match_fraction(d.overlap);
  CHECK(f.total == 49 * 40);
  CHECK(f.matched == f.total - d.mismatches());
  CHECK_THROWS_AS(d.match_fraction(Window{0, 0, 50, 40}), UsageError);
  CHECK_THROWS_AS(diff_grids(a, b, {50, 0}, 0), UsageError);

  // Offsets address b at (x + dx, y + dy) and compare against a + delta.
  const auto shifted = diff_grids(a, a, {1, 0}, 0);
  CHECK(shifted.mismatch_at(3, 0) == (a(3, 0) != a(4, 0)));
}

TEST_CASE("fabric classes") {
  const auto window = fixtures().window(100, "fabric");
  const auto report = fabric_class_check(100, 103, window);
  CHECK(report.passed);
  CHECK(report.counters.at("cells") == window.width() * window.height());
  CHECK(fabric_class_check(40, 40, Window{0, 0, 60, 60}).passed);
  CHECK_THROWS_AS(fabric_class_check(100, 101, window), UsageError);
}

TEST_CASE("thread tracking") {
  const auto grid = solve_grid(GameParams(100), 300, 300);
  CHECK(thread_thickness(grid, fixtures().window(100, "outer_space")).empty());
  CHECK(thread_thickness(grid, Window{10, 10, 10, 20}).empty());
  CHECK_THROWS_AS(thread_thickness(grid, Window{0, 0, 20, 20}, 0), UsageError);

  // Two dotted strings two columns apart that merge into one.
  std::vector<Position> palaces;
  for (int x = 0; x < 12; ++x) palaces.push_back({x, 2 * x});
  for (int x = 0; x < 12; ++x) palaces.push_back({x, 2 * x + 9});
  const auto threads = thread_thickness(marked(12, 40, palaces), Window{0, 0, 12, 40}, 3);
  REQUIRE(threads.size() == 2);
  for (const auto& t : threads) {
    CHECK(t.constant);
    CHECK(t.fibonacci);
    CHECK(t.counts.size() == 12);
    CHECK(t.counts[0] == 1);
  }

  std::vector<Position> merging;
  for (int x = 0; x < 10; ++x) merging.push_back({x, 3 * x});
  for (int x = 0; x < 10; ++x) merging.push_back({x, 20 + x});
  const auto merged = thread_thickness(marked(10, 40, merging), Window{0, 0, 10, 40}, 3);
  bool saw_merge = false;
  for (const auto& t : merged) saw_merge = saw_merge || t.parents.size() == 2;
  CHECK(saw_merge);
  const auto report = thread_report(merged, 1);
  CHECK(report.counters.at("threads") == static_cast<std::int64_t>(merged.size()));
}

TEST_CASE("fixture file") {
  const auto& f = fixtures();
  CHECK(f.version == 1);
  CHECK(f.has(1000, "skin_band"));
  CHECK(f.window(497, "hood") == Window{0, 0, 166, 166});
  CHECK_THROWS_AS(f.window(42, "hood"), UsageError);
  REQUIRE(f.diffs.size() == 2);
  CHECK(f.diffs[0].offset == Position{1, 1});
  CHECK(f.diffs[1].regions == std::vector<std::string>{"epaulette_upper", "arm"});
  CHECK(f.fabric_classes.size() == 2);
  CHECK_THROWS_AS(parse_fixtures("{"), FormatError);
  CHECK_THROWS_AS(parse_fixtures(R"({"version": 1, "windows": {"5": {"a": [1, 2, 3]}}})"), FormatError);
  CHECK_THROWS_AS(parse_fixtures(R"({"version": 1, "windows": {"5": {"a": [4, 0, 2, 3]}}})"), FormatError);
  CHECK_THROWS_AS(parse_fixtures(R"({"version": 1, "windows": {"five": {}}})"), FormatError);
  CHECK_THROWS_AS(load_fixtures("/nonexistent/fixtures.json"), UsageError);
}
