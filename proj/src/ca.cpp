#include "blockq/ca.hpp"

#include "blockq/errors.hpp"
#include "wavefront.hpp"

namespace blockq {

namespace {

constexpr int flag(CaState s) { return s < 0 ? 1 : 0; }

}  // namespace

int compensation_bcdef(CaState b, CaState c, CaState d, CaState e, CaState f) {
  using W = CompensationTable;
  return W::b * flag(b) + W::c * flag(c) + W::d * flag(d) + W::e * flag(e) + W::f * flag(f);
}

CaState ca_local_rule(const CaNeighborhood& n) {
  const int p = CompensationTable::a * flag(n.a) + compensation_bcdef(n.b, n.c, n.d, n.e, n.f);
  return n.a - n.b - n.c + n.e + n.f + p;
}

CaState initial_state(GameParams params, int x, int y) {
  if (x >= 0 && y >= 0) throw UsageError("initial_state queried inside the game quadrant");
  return (x < 0 && y < 0) ? params.k : 0;
}

PalaceGrid run_ca(GameParams params, int width, int height, SolveOptions opts) {
  const int k = params.k;
  auto states = allocate_cells(width, height);
  auto read = [&](int x, int y) -> CaState {
    if (x < 0 || y < 0) return (x < 0 && y < 0) ? k : 0;
    return states[static_cast<std::size_t>(y) * width + x];
  };
  auto visit = [&](int x, int y) {
    const CaNeighborhood n{read(x - 2, y - 2), read(x - 1, y - 2), read(x - 2, y - 1),
                           read(x - 1, y - 1), read(x, y - 1),     read(x - 1, y)};
    states[static_cast<std::size_t>(y) * width + x] = ca_local_rule(n);
  };
  if (opts.threads <= 1) {
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) visit(x, y);
  } else {
    detail::for_each_antidiagonal(width, height, opts.threads, visit);
  }
  for (auto& s : states) s += k;
  return PalaceGrid(k, width, height, std::move(states));
}

std::vector<CaState> reverse_cell(CaState b, CaState c, CaState d, CaState e, CaState f,
                                  CaState g) {
  const CaState r = g - f - e + c + b - compensation_bcdef(b, c, d, e, f);
  if (r >= 3) return {r};
  if (r < 0) return {r - 3};
  return {r, r - 3};
}

CaNeighborhood neighborhood_at(const PalaceGrid& grid, int x, int y) {
  const int k = grid.k();
  auto read = [&](int px, int py) -> CaState {
    if (px < 0 || py < 0) return (px < 0 && py < 0) ? k : 0;
    return grid.state(px, py);
  };
  if (!grid.contains({x, y})) throw UsageError("neighborhood target outside grid");
  return {read(x - 2, y - 2), read(x - 1, y - 2), read(x - 2, y - 1),
          read(x - 1, y - 1), read(x, y - 1),     read(x - 1, y)};
}

}  // namespace blockq
