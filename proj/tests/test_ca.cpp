#include <doctest.h>

#include <algorithm>

#include "blockq/ca.hpp"
#include "blockq/errors.hpp"

using namespace blockq;

TEST_CASE("local rule examples") {
  CHECK(ca_local_rule({0, 0, 0, 0, 0, 0}) == 0);
  CHECK(ca_local_rule({5, 5, 5, 5, 0, 0}) == -5);
  // Neighborhood of (1,0) for k=5: a, c outside both axes' quadrant corner.
  CHECK(ca_local_rule({5, 0, 5, 0, 0, -5}) == -4);
  // Each compensation fires on a negative state only.
  CHECK(ca_local_rule({-1, 0, 0, 0, 0, 0}) == -1 + 3);
  CHECK(ca_local_rule({0, -1, 0, 0, 0, 0}) == 1 - 2);
  CHECK(ca_local_rule({0, 0, -1, 0, 0, 0}) == 1 - 2);
  CHECK(ca_local_rule({0, 0, 0, -1, 0, 0}) == -1);
  CHECK(ca_local_rule({0, 0, 0, 0, -1, 0}) == -1 + 1);
  CHECK(ca_local_rule({0, 0, 0, 0, 0, -1}) == -1 + 1);
  CHECK(compensation_bcdef(-1, -1, -1, -1, -1) == -2 - 2 - 1 + 1 + 1);
  CHECK(compensation_bcdef(0, 0, 0, 0, 0) == 0);
}

TEST_CASE("initial condition outside the quadrant") {
  GameParams p(5);
  CHECK(initial_state(p, -1, -1) == 5);
  CHECK(initial_state(p, -2, -1) == 5);
  CHECK(initial_state(p, -1, 5) == 0);
  CHECK(initial_state(p, 3, -2) == 0);
  CHECK_THROWS_AS(initial_state(p, 0, 0), UsageError);
}

TEST_CASE("automaton reproduces the direct solve") {
  for (int k : {1, 2, 3, 5, 13}) {
    CHECK(run_ca(GameParams(k), 11, 11) == solve_grid(GameParams(k), 11, 11));
    CHECK(run_ca(GameParams(k), 150, 90) == solve_grid(GameParams(k), 150, 90));
  }
  CHECK(run_ca(GameParams(5), 1, 1)(0, 0) == 0);
}

TEST_CASE("automaton output does not depend on thread count") {
  const auto base = run_ca(GameParams(7), 180, 130);
  for (int threads : {2, 5}) CHECK(run_ca(GameParams(7), 180, 130, {threads}) == base);
}

TEST_CASE("reverse rule examples") {
  CHECK(reverse_cell(0, 0, 0, 0, 0, 0) == std::vector<CaState>{0, -3});
  CHECK(reverse_cell(0, 0, 0, 0, 0, 7) == std::vector<CaState>{7});
  CHECK(reverse_cell(0, 0, 0, 0, 0, -2) == std::vector<CaState>{-5});
}

TEST_CASE("reverse rule is sound and complete over a state cube") {
  // Forward rule for every a in a wide range; reverse must list exactly
  // those a that reproduce g.
  for (int b = -3; b <= 2; ++b)
    for (int c = -3; c <= 2; ++c)
      for (int d = -2; d <= 1; ++d)
        for (int e = -2; e <= 1; ++e)
          for (int f = -2; f <= 1; ++f)
            for (int g = -6; g <= 6; ++g) {
              std::vector<CaState> expected;
              for (int a = 30; a >= -30; --a)
                if (ca_local_rule({a, b, c, d, e, f}) == g) expected.push_back(a);
              REQUIRE(reverse_cell(b, c, d, e, f, g) == expected);
            }
}

TEST_CASE("reverse rule holds on computed grids") {
  for (int k : {5, 100}) {
    const auto grid = solve_grid(GameParams(k), 120, 120);
    int ambiguous = 0;
    for (int y = 0; y + 2 < 120; ++y)
      for (int x = 0; x + 2 < 120; ++x) {
        const auto n = neighborhood_at(grid, x + 2, y + 2);
        REQUIRE(n.a == grid.state(x, y));
        const auto r = reverse_cell(n.b, n.c, n.d, n.e, n.f, grid.state(x + 2, y + 2));
        REQUIRE(std::find(r.begin(), r.end(), grid.state(x, y)) != r.end());
        ambiguous += r.size() == 2;
      }
    CHECK(ambiguous > 0);
  }
}

TEST_CASE("neighborhood reads the boundary outside the quadrant") {
  const auto grid = solve_grid(GameParams(5), 4, 4);
  const auto n = neighborhood_at(grid, 1, 0);
  CHECK(n == CaNeighborhood{5, 0, 5, 0, 0, -5});
  CHECK_THROWS_AS(neighborhood_at(grid, 4, 0), UsageError);
}
