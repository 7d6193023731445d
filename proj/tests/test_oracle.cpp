#include <doctest.h>

#include <map>

#include "blockq/errors.hpp"
#include "blockq/oracle.hpp"
#include "blockq/solver.hpp"

using namespace blockq;

namespace {

// Plain pawn-game search: blocked sets kept verbatim, every subset of the
// next position's options tried as the reply block.
class NaiveGame {
 public:
  explicit NaiveGame(int k) : k_(k) {}

  bool wins(Position q, const BlockedSet& blocked) {
    auto key = std::make_pair(q, blocked);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (auto m : options(q)) {
      if (blocked.count(m)) continue;
      if (some_block_wins(m)) {
        result = true;
        break;
      }
    }
    memo_[key] = result;
    return result;
  }

  bool is_p(Position pos) { return some_block_wins(pos); }

 private:
  bool some_block_wins(Position m) {
    const auto opts = options(m);
    bool found = false;
    BlockedSet chosen;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (found) return;
      if (!wins(m, chosen)) {
        found = true;
        return;
      }
      if (static_cast<int>(chosen.size()) == k_ - 1) return;
      for (std::size_t j = i; j < opts.size(); ++j) {
        chosen.insert(opts[j]);
        self(self, j + 1);
        chosen.erase(opts[j]);
      }
    };
    recurse(recurse, 0);
    return found;
  }

  int k_;
  std::map<std::pair<Position, BlockedSet>, bool> memo_;
};

}  // namespace

TEST_CASE("game tree examples") {
  CHECK_FALSE(game_tree_wins({{0, 0}, {}, GameParams(1)}));
  CHECK_FALSE(game_tree_wins({{3, 3}, {{0, 0}, {1, 1}, {0, 3}, {3, 0}}, GameParams(5)}, {7, 5}));
  CHECK(game_tree_wins({{1, 1}, {}, GameParams(2)}));
  CHECK(oracle_is_p(GameParams(1), {1, 2}));
  CHECK_FALSE(oracle_is_p(GameParams(2), {1, 1}));
  for (int k = 1; k <= 3; ++k) CHECK(oracle_is_p(GameParams(k), {0, 0}));
}

TEST_CASE("memoized search agrees with plain search") {
  for (int k = 1; k <= 3; ++k) {
    NaiveGame naive(k);
    GameTreeSolver solver{GameParams(k)};
    for (int y = 0; y <= 4; ++y)
      for (int x = 0; x <= 4; ++x) {
        CAPTURE(k);
        CAPTURE(x);
        CAPTURE(y);
        REQUIRE(solver.is_p({x, y}) == naive.is_p({x, y}));
      }
    if (k >= 2) CHECK(solver.wins({2, 3}, {{1, 2}}) == naive.wins({2, 3}, {{1, 2}}));
  }
}

TEST_CASE("search agrees with palace numbers") {
  for (int k = 1; k <= 3; ++k) {
    GameTreeSolver solver{GameParams(k)};
    const auto grid = solve_grid(GameParams(k), 7, 7);
    for (int y = 0; y < 7; ++y)
      for (int x = 0; x < 7; ++x) REQUIRE(solver.is_p({x, y}) == grid.palace(x, y));
    CHECK(solver.memo_size() > 0);
  }
}

TEST_CASE("search limits and argument errors") {
  GameTreeSolver solver{GameParams(2)};
  CHECK_THROWS_AS(solver.is_p({8, 0}), ResourceError);
  CHECK_THROWS_AS(GameTreeSolver(GameParams(4)), ResourceError);
  CHECK_THROWS_AS(solver.wins({2, 2}, {{2, 2}}), UsageError);
  CHECK_THROWS_AS(solver.wins({2, 2}, {{0, 0}, {1, 1}}), UsageError);
  CHECK_THROWS_AS(solver.wins({{1, 1}, {}, GameParams(3)}), UsageError);
  // Pawns off the queen's lines do not change the outcome.
  CHECK(solver.wins({2, 2}, {{5, 5}}) == solver.wins({2, 2}, {}));
}

TEST_CASE("Wythoff closed form examples") {
  CHECK(wythoff_closed_form(0).lower == Position{0, 0});
  CHECK(wythoff_closed_form(1).lower == Position{1, 2});
  CHECK(wythoff_closed_form(1).mirror == Position{2, 1});
  CHECK(wythoff_closed_form(3).lower == Position{4, 7});
  CHECK(wythoff_closed_form(3).mirror == Position{7, 4});
  CHECK_THROWS_AS(wythoff_closed_form(-1), UsageError);
  CHECK_THROWS_AS(wythoff_closed_form(kMaxWythoffIndex + 1), UsageError);
  CHECK_NOTHROW(wythoff_closed_form(kMaxWythoffIndex));
}

TEST_CASE("Wythoff closed form matches the mex construction") {
  // a_n is the least number not yet used by an earlier pair, b_n = a_n + n.
  constexpr int kPairs = 1'000'000;
  std::vector<bool> used(3 * kPairs, false);
  int a = 0;
  for (int n = 0; n <= kPairs; ++n) {
    while (used[a]) ++a;
    const int b = a + n;
    used[a] = true;
    if (b < static_cast<int>(used.size())) used[b] = true;
    const auto pair = wythoff_closed_form(n);
    REQUIRE(pair.lower.x == a);
    REQUIRE(pair.lower.y == b);
  }
  // Large indices stay within the Beatty relation b = a + n and a(n+1) > a(n).
  const auto hi = wythoff_closed_form(kMaxWythoffIndex);
  CHECK(hi.lower.y - hi.lower.x == kMaxWythoffIndex);
  CHECK(wythoff_closed_form(kMaxWythoffIndex - 1).lower.x < hi.lower.x);
}

TEST_CASE("winning moves") {
  const auto g5 = solve_grid(GameParams(5), 4, 4);
  CHECK_FALSE(winning_move(GameParams(5), {3, 3}, {{0, 0}, {1, 1}, {0, 3}, {3, 0}}, g5));

  const auto move = winning_move(GameParams(5), {2, 2}, {}, g5);
  REQUIRE(move);
  CHECK(g5.palace(move->move.x, move->move.y));
  CHECK(static_cast<int>(move->block.size()) <= 4);
  for (auto p : options(move->move)) CHECK((!g5.palace(p.x, p.y) || move->block.count(p) == 1));

  const auto g1 = solve_grid(GameParams(1), 3, 3);
  const auto m1 = winning_move(GameParams(1), {2, 2}, {}, g1);
  REQUIRE(m1);
  CHECK(BlockedSet{{1, 2}, {2, 1}, {0, 0}}.count(m1->move) == 1);
  CHECK(m1->block.empty());
  // (2,1) is itself a Beatty pair, so every move from it loses.
  CHECK_FALSE(winning_move(GameParams(1), {2, 1}, {}, g1));
  CHECK_FALSE(winning_move(GameParams(1), {0, 0}, {}, g1));

  CHECK_THROWS_AS(winning_move(GameParams(2), {1, 1}, {}, g1), UsageError);
  CHECK_THROWS_AS(winning_move(GameParams(1), {5, 5}, {}, g1), UsageError);
}

TEST_CASE("winning moves are verified by search") {
  for (int k = 1; k <= 3; ++k) {
    GameTreeSolver solver{GameParams(k)};
    const auto grid = solve_grid(GameParams(k), 7, 7);
    for (int y = 0; y < 7; ++y)
      for (int x = 0; x < 7; ++x) {
        const auto move = winning_move(GameParams(k), {x, y}, {}, grid);
        REQUIRE(move.has_value() == solver.wins({x, y}, {}));
        if (move) REQUIRE_FALSE(solver.wins(move->move, move->block));
      }
  }
}
