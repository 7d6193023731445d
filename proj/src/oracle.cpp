#include "blockq/oracle.hpp"

#include <cmath>
#include <string>

#include "blockq/errors.hpp"
#include "blockq/solver.hpp"

namespace blockq {

namespace {

// All bitmasks over `n` items with at most `max_bits` bits set.
template <typename Visit>
bool any_subset(int n, int max_bits, std::uint64_t mask, int from, Visit&& visit) {
  if (visit(mask)) return true;
  if (max_bits == 0) return false;
  for (int i = from; i < n; ++i)
    if (any_subset(n, max_bits - 1, mask | (std::uint64_t{1} << i), i + 1, visit)) return true;
  return false;
}

}  // namespace

GameTreeSolver::GameTreeSolver(GameParams params, OracleLimits limits)
    : k_(params.k), limits_(limits) {
  if (limits.max_coordinate < 0 || 3 * limits.max_coordinate > 63)
    throw UsageError("oracle coordinate limit must be in [0, 21]");
  if (k_ > limits.max_k)
    throw ResourceError("k=" + std::to_string(k_) + " exceeds oracle limit " +
                        std::to_string(limits.max_k));
  const auto side = static_cast<std::size_t>(limits.max_coordinate + 1);
  options_.resize(side * side);
  wins_memo_.resize(side * side);
  p_memo_.assign(side * side, -1);
}

void GameTreeSolver::check_bounds(Position pos) const {
  if (pos.x < 0 || pos.y < 0) throw UsageError("negative queen coordinate");
  if (pos.x > limits_.max_coordinate || pos.y > limits_.max_coordinate)
    throw ResourceError("position (" + std::to_string(pos.x) + "," + std::to_string(pos.y) +
                        ") beyond oracle limit " + std::to_string(limits_.max_coordinate));
}

std::size_t GameTreeSolver::index(Position pos) const {
  return static_cast<std::size_t>(pos.y) * (limits_.max_coordinate + 1) + pos.x;
}

const std::vector<Position>& GameTreeSolver::options_of(Position pos) {
  auto& opts = options_[index(pos)];
  if (opts.empty() && (pos.x > 0 || pos.y > 0)) opts = options(pos);
  return opts;
}

bool GameTreeSolver::wins(Position queen, const BlockedSet& blocked) {
  check_bounds(queen);
  if (static_cast<int>(blocked.size()) > k_ - 1)
    throw UsageError("more than k-1 pawns in blocked set");
  if (blocked.contains(queen)) throw UsageError("queen stands on a pawn");
  const auto& opts = options_of(queen);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < opts.size(); ++i)
    if (blocked.contains(opts[i])) mask |= std::uint64_t{1} << i;
  return wins_masked(queen, mask);
}

bool GameTreeSolver::wins(const GameState& state) {
  if (state.params.k != k_) throw UsageError("game state k differs from solver k");
  return wins(state.queen, state.blocked);
}

bool GameTreeSolver::wins_masked(Position queen, std::uint64_t blocked_mask) {
  auto& memo = wins_memo_[index(queen)];
  if (auto it = memo.find(blocked_mask); it != memo.end()) return it->second;
  const auto& opts = options_of(queen);
  bool result = false;
  for (std::size_t i = 0; i < opts.size() && !result; ++i) {
    if (blocked_mask & (std::uint64_t{1} << i)) continue;
    result = is_p(opts[i]);
  }
  memo.emplace(blocked_mask, result);
  return result;
}

bool GameTreeSolver::is_p(Position pos) {
  check_bounds(pos);
  auto& cached = p_memo_[index(pos)];
  if (cached >= 0) return cached == 1;
  const int n = static_cast<int>(options_of(pos).size());
  const bool p = any_subset(n, std::min(k_ - 1, n), 0, 0,
                            [&](std::uint64_t mask) { return !wins_masked(pos, mask); });
  cached = p ? 1 : 0;
  return p;
}

std::size_t GameTreeSolver::memo_size() const {
  std::size_t n = 0;
  for (const auto& m : wins_memo_) n += m.size();
  return n;
}

bool game_tree_wins(const GameState& state, OracleLimits limits) {
  GameTreeSolver solver(state.params, limits);
  return solver.wins(state);
}

bool oracle_is_p(GameParams params, Position pos, OracleLimits limits) {
  GameTreeSolver solver(params, limits);
  return solver.is_p(pos);
}

WythoffPair wythoff_closed_form(std::int64_t n) {
  if (n < 0 || n > kMaxWythoffIndex)
    throw UsageError("Wythoff index out of range: " + std::to_string(n));
  // floor(n*phi) = floor((n + sqrt(5 n^2)) / 2) = (n + isqrt(5 n^2)) / 2,
  // since sqrt(5 n^2) is irrational for n > 0.
  const auto square = static_cast<std::uint64_t>(5) * static_cast<std::uint64_t>(n) *
                      static_cast<std::uint64_t>(n);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(square)));
  while (root * root > square) --root;
  while ((root + 1) * (root + 1) <= square) ++root;
  const auto a = static_cast<int>((static_cast<std::uint64_t>(n) + root) / 2);
  const auto b = static_cast<int>(a + n);
  return {{a, b}, {b, a}};
}

std::optional<WinningMove> winning_move(GameParams params, Position queen,
                                        const BlockedSet& blocked, const PalaceGrid& grid) {
  if (grid.k() != params.k) throw UsageError("grid was solved for a different k");
  const auto opts = options(queen);
  for (const auto& m : opts)
    if (!grid.contains(m)) throw UsageError("grid does not cover the queen's options");
  for (const auto& m : opts) {
    if (blocked.contains(m) || grid(m.x, m.y) >= params.k) continue;
    WinningMove out{m, {}};
    for (const auto& r : options(m))
      if (grid(r.x, r.y) < params.k) out.block.insert(r);
    return out;
  }
  return std::nullopt;
}

}  // namespace blockq
