#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "blockq/grid.hpp"

namespace blockq {

// Pawn positions left by the previous player. Only members that are options
// of the queen affect play.
using BlockedSet = std::set<Position>;

struct GameState {
  Position queen;
  BlockedSet blocked;
  GameParams params;
};

// Exhaustive search is only meant for small boards.
struct OracleLimits {
  int max_coordinate = 7;
  int max_k = 3;
};

// Exact game-tree search over the pawn formulation. The mover loses when every
// option is blocked; otherwise wins iff some unblocked option m admits a block
// set B' (a subset of options(m), |B'| <= k-1) leaving the opponent lost.
// Pawns outside the mover's options are irrelevant, so blocked sets are
// canonicalized to a bitmask over the queen's option list before memoizing.
//
// Not thread-safe: give each thread its own solver.
class GameTreeSolver {
 public:
  explicit GameTreeSolver(GameParams params, OracleLimits limits = {});

  int k() const { return k_; }

  // Throws ResourceError beyond the configured limits, UsageError when the
  // queen sits on a pawn or more than k-1 pawns are given.
  bool wins(const GameState& state);
  bool wins(Position queen, const BlockedSet& blocked);

  // True iff the player who just moved the queen to `pos` can place pawns so
  // that the opponent loses: the P-position test by search.
  bool is_p(Position pos);

  std::size_t memo_size() const;

 private:
  bool wins_masked(Position queen, std::uint64_t blocked_mask);
  void check_bounds(Position pos) const;
  const std::vector<Position>& options_of(Position pos);
  std::size_t index(Position pos) const;

  int k_;
  OracleLimits limits_;
  std::vector<std::vector<Position>> options_;
  std::vector<std::unordered_map<std::uint64_t, bool>> wins_memo_;
  std::vector<std::int8_t> p_memo_;  // -1 unknown
};

bool game_tree_wins(const GameState& state, OracleLimits limits = {});
bool oracle_is_p(GameParams params, Position pos, OracleLimits limits = {});

// (floor(n*phi), floor(n*phi^2)) and its mirror, in exact integer arithmetic.
struct WythoffPair {
  Position lower;   // (a_n, b_n)
  Position mirror;  // (b_n, a_n)
};

// Valid for 0 <= n <= kMaxWythoffIndex; throws UsageError otherwise.
inline constexpr std::int64_t kMaxWythoffIndex = 500'000'000;
WythoffPair wythoff_closed_form(std::int64_t n);

struct WinningMove {
  Position move;
  BlockedSet block;  // palaces among the options of `move`
};

// Moves to an unblocked palace option of the queen and blocks every palace
// reachable from there (at most k-1 of them). nullopt when every legal move
// lands on an N-position or there is no legal move.
std::optional<WinningMove> winning_move(GameParams params, Position queen,
                                        const BlockedSet& blocked, const PalaceGrid& grid);

}  // namespace blockq
