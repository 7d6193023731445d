#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockq/errors.hpp"
#include "blockq/solver.hpp"

using namespace blockq;

namespace {

// Definitional recount: every value recomputed by walking the three
// directions over the values filled so far. Cubic, small grids only.
std::vector<int> recount(int k, int w, int h) {
  std::vector<int> v(static_cast<std::size_t>(w) * h, 0);
  auto at = [&](int x, int y) { return v[static_cast<std::size_t>(y) * w + x]; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      int n = 0;
      for (int i = 0; i < x; ++i) n += at(i, y) < k;
      for (int j = 0; j < y; ++j) n += at(x, j) < k;
      for (int t = 1; t <= std::min(x, y); ++t) n += at(x - t, y - t) < k;
      v[static_cast<std::size_t>(y) * w + x] = n;
    }
  return v;
}

}  // namespace

TEST_CASE("options enumerate west, north, then diagonal") {
  CHECK(options({0, 0}).empty());
  CHECK(options({1, 1}) == std::vector<Position>{{0, 1}, {1, 0}, {0, 0}});
  const auto opts = options({3, 3});
  CHECK(opts.size() == 9);
  for (Position p : {Position{3, 1}, Position{3, 2}, Position{2, 2}, Position{2, 3}, Position{1, 3}})
    CHECK(std::find(opts.begin(), opts.end(), p) != opts.end());
  CHECK(options({4, 2}).size() == 4 + 2 + 2);
}

TEST_CASE("k=5 values from the opening example") {
  const auto g = solve_grid(GameParams(5), 11, 11);
  CHECK(g(3, 3) == 4);
  CHECK(g(2, 2) == 6);
  CHECK(g(3, 1) == 5);
  std::vector<int> first_row(g.row(0).begin(), g.row(0).end());
  CHECK(first_row == std::vector<int>{0, 1, 2, 3, 4, 5, 5, 5, 5, 5, 5});
  CHECK(is_palace(g, {0, 3}));
  CHECK_FALSE(is_palace(g, {2, 2}));
  CHECK(is_palace(g, {0, 0}));
  CHECK_THROWS_AS(is_palace(g, {11, 0}), UsageError);
}

TEST_CASE("k=1 palaces are the classical Wythoff pairs") {
  const auto g = solve_grid(GameParams(1), 14, 14);
  std::set<Position> expected{{0, 0}, {1, 2}, {2, 1}, {3, 5}, {5, 3}, {4, 7}, {7, 4}, {6, 10}, {10, 6}, {8, 13}, {13, 8}};
  for (int y = 0; y < 14; ++y)
    for (int x = 0; x < 14; ++x) CHECK(g.palace(x, y) == (expected.count({x, y}) == 1));
}

TEST_CASE("solver agrees with the definitional recount") {
  for (int k : {1, 2, 3, 4, 7}) {
    const auto g = solve_grid(GameParams(k), 37, 23);
    const auto expected = recount(k, 37, 23);
    CHECK(std::equal(g.values().begin(), g.values().end(), expected.begin(), expected.end()));
  }
}

TEST_CASE("values are symmetric and bounded by 3k") {
  for (int k : {1, 3, 10}) {
    const auto g = solve_grid(GameParams(k), 120, 120);
    for (int y = 0; y < 120; ++y)
      for (int x = 0; x < 120; ++x) {
        REQUIRE(g(x, y) == g(y, x));
        REQUIRE(g(x, y) >= 0);
        REQUIRE(g(x, y) <= 3 * k);
      }
  }
}

TEST_CASE("row 0 and column 0 saturate at k") {
  const auto g = solve_grid(GameParams(7), 20, 20);
  for (int i = 0; i < 20; ++i) {
    CHECK(g(i, 0) == std::min(i, 7));
    CHECK(g(0, i) == std::min(i, 7));
  }
}

TEST_CASE("streaming rows equal the whole-grid solve") {
  for (auto [k, w, h] : {std::tuple{5, 11, 11}, std::tuple{13, 40, 90}, std::tuple{100, 257, 300}, std::tuple{2, 1, 50}}) {
    CHECK(solve_grid_streaming(GameParams(k), w, h) == solve_grid(GameParams(k), w, h));
  }
  RowStream stream(GameParams(4), 30);
  const auto g = solve_grid(GameParams(4), 30, 10);
  for (int y = 0; y < 10; ++y) {
    CHECK(stream.next_row() == y);
    auto row = stream.next();
    CHECK(std::equal(row.begin(), row.end(), g.row(y).begin(), g.row(y).end()));
  }
  CHECK(stream.counters().col_counts.size() == 30);
  CHECK(stream.counters().diag_counts.size() == 30);
}

TEST_CASE("thread count never changes the grid") {
  for (int k : {1, 5, 100}) {
    const auto base = solve_grid(GameParams(k), 203, 151);
    for (int threads : {2, 3, 8}) CHECK(solve_grid(GameParams(k), 203, 151, {threads}) == base);
  }
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(GameParams(0), UsageError);
  CHECK_THROWS_AS(solve_grid(GameParams(1), 0, 5), UsageError);
  CHECK_THROWS_AS(RowStream(GameParams(1), 0), UsageError);
  CHECK_THROWS_AS(solve_grid(GameParams(1), 1 << 30, 1 << 30), ResourceError);
}

TEST_CASE("no row, column or diagonal holds more than k palaces") {
  for (int k : {1, 4, 30}) {
    const int n = 200;
    const auto g = solve_grid(GameParams(k), n, n);
    for (int i = 0; i < n; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < n; ++j) {
        row += g.palace(j, i);
        col += g.palace(i, j);
      }
      CHECK(row <= k);
      CHECK(col <= k);
    }
    for (int d = -(n - 1); d < n; ++d) {
      int diag = 0;
      for (int y = 0; y < n; ++y)
        if (int x = y + d; x >= 0 && x < n) diag += g.palace(x, y);
      CHECK(diag <= k);
    }
  }
}
