#include "blockq/analysis.hpp"

#include <algorithm>
#include <set>

#include "blockq/errors.hpp"
#include "blockq/skin.hpp"
#include "blockq/solver.hpp"

namespace blockq {

namespace {

int hood_value(int x, int y) { return 2 * std::min(x, y) + std::max(x, y); }

}  // namespace

Report hood_check(const PalaceGrid& grid) {
  const int k = grid.k();
  if (grid.width() <= k || grid.height() <= k)
    throw UsageError("hood check needs a grid larger than k in both dimensions");
  Report report("hood");
  report.parameters = {{"k", k}, {"width", grid.width()}, {"height", grid.height()}};

  std::int64_t cells = 0, palaces = 0;
  for (int y = 0; y <= k; ++y) {
    for (int x = 0; x <= k; ++x) {
      const int expected = hood_value(x, y);
      if (expected > k) continue;
      ++cells;
      const auto v = grid(x, y);
      if (v != expected || (expected < k && v >= k)) report.fail_at({x, y});
      if (v < k) ++palaces;
    }
  }
  report.counters["hood_cells"] = cells;
  report.counters["hood_palaces"] = palaces;

  // Shoulders: row 0 and column 0 are palaces exactly up to k - 1.
  auto first_non_palace = [&](auto&& at) {
    int i = 0;
    while (i <= k && at(i) < k) ++i;
    return i;
  };
  const int shoulder_x = first_non_palace([&](int i) { return grid(i, 0); });
  const int shoulder_y = first_non_palace([&](int i) { return grid(0, i); });
  report.details["shoulder"] = {to_json(Position{shoulder_x, 0}), to_json(Position{0, shoulder_y})};
  if (shoulder_x != k) report.fail_at({shoulder_x, 0});
  if (shoulder_y != k) report.fail_at({0, shoulder_y});

  // Nose: first main-diagonal cell that is not a palace. Exact at k/3 only
  // when 3 divides k; otherwise reported as observed.
  int t = 0;
  while (t <= k && grid(t, t) < k) ++t;
  report.details["nose"] = to_json(Position{t, t});
  report.details["nose_exact"] = (k % 3 == 0);
  if (k % 3 == 0 && t != k / 3) report.fail_at({t, t});
  return report;
}

Report epaulette_check(const PalaceGrid& grid, const Window& window, EpauletteSide side) {
  require_window(grid, window);
  const int k = grid.k();
  const bool upper = side == EpauletteSide::upper;
  Report report("epaulette");
  report.parameters = {{"k", k}, {"window", to_json(window)}, {"side", upper ? "upper" : "left"}};

  std::int64_t tested = 0, skipped = 0;
  const Position periods[] = {upper ? Position{1, 5} : Position{5, 1},
                              upper ? Position{3, 4} : Position{4, 3}};
  report.details["periods"] = {to_json(periods[0]), to_json(periods[1])};
  for (int y = window.y0; y < window.y1; ++y) {
    for (int x = window.x0; x < window.x1; ++x) {
      for (const auto& p : periods) {
        if (!window.contains({x + p.x, y + p.y})) {
          ++skipped;
          continue;
        }
        ++tested;
        if (grid(x, y) != grid(x + p.x, y + p.y)) report.fail_at({x, y});
      }
    }
  }
  report.counters["tested_pairs"] = tested;
  report.counters["skipped_pairs"] = skipped;

  // Every 11 consecutive cells of a row are a fundamental domain: the
  // lattice spanned by (5,1) and (4,3) meets the x axis in multiples of 11.
  // Mirrored for the upper epaulette.
  const int run_dx = upper ? 0 : 1, run_dy = upper ? 1 : 0;
  std::int64_t domains = 0, bad_domains = 0;
  for (int y = window.y0; y + 10 * run_dy < window.y1; ++y) {
    for (int x = window.x0; x + 10 * run_dx < window.x1; ++x) {
      int below = 0, equal = 0, above = 0, other = 0;
      for (int i = 0; i < 11; ++i) {
        const auto v = grid(x + i * run_dx, y + i * run_dy);
        if (v == k - 1) ++below;
        else if (v == k) ++equal;
        else if (v == k + 1) ++above;
        else ++other;
      }
      if (domains == 0)
        report.details["census"] = {{"k-1", below}, {"k", equal}, {"k+1", above}, {"other", other}};
      ++domains;
      if (below != 5 || equal != 3 || above != 3) {
        ++bad_domains;
        report.fail_at({x, y});
      }
    }
  }
  report.counters["census_domains"] = domains;
  report.counters["census_failures"] = bad_domains;
  return report;
}

std::map<std::int32_t, std::int64_t> state_histogram(const PalaceGrid& grid, const Region& region) {
  std::map<std::int32_t, std::int64_t> out;
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x)
      if (region({x, y})) ++out[grid.state(x, y)];
  return out;
}

Region hood_region(int k) {
  return [k](Position p) { return hood_value(p.x, p.y) <= k; };
}

Region beyond_hood_region(int k) {
  return [k](Position p) { return hood_value(p.x, p.y) > k; };
}

Region window_region(const Window& w) {
  return [w](Position p) { return w.contains(p); };
}

std::int64_t DiffReport::mismatches() const {
  return std::count(mismatch.begin(), mismatch.end(), std::uint8_t{1});
}

Fraction DiffReport::match_fraction(const Window& w) const {
  if (w.x0 < overlap.x0 || w.y0 < overlap.y0 || w.x1 > overlap.x1 || w.y1 > overlap.y1 ||
      w.x0 >= w.x1 || w.y0 >= w.y1)
    throw UsageError("match window lies outside the diff overlap");
  Fraction f;
  for (int y = w.y0; y < w.y1; ++y)
    for (int x = w.x0; x < w.x1; ++x) {
      ++f.total;
      if (!mismatch_at(x, y)) ++f.matched;
    }
  return f;
}

DiffReport diff_grids(const PalaceGrid& a, const PalaceGrid& b, Position offset, int delta) {
  DiffReport out;
  out.offset = offset;
  out.delta = delta;
  out.k_a = a.k();
  out.k_b = b.k();
  out.overlap = {std::max(0, -offset.x), std::max(0, -offset.y),
                 std::min(a.width(), b.width() - offset.x),
                 std::min(a.height(), b.height() - offset.y)};
  if (out.overlap.x0 >= out.overlap.x1 || out.overlap.y0 >= out.overlap.y1)
    throw UsageError("grids do not overlap under the requested offset");
  const auto cells = static_cast<std::size_t>(out.overlap.width()) * out.overlap.height();
  out.mismatch.reserve(cells);
  out.base_states.reserve(cells);
  for (int y = out.overlap.y0; y < out.overlap.y1; ++y)
    for (int x = out.overlap.x0; x < out.overlap.x1; ++x) {
      out.mismatch.push_back(b(x + offset.x, y + offset.y) != a(x, y) + delta ? 1 : 0);
      out.base_states.push_back(a.state(x, y));
    }
  return out;
}

Report fabric_class_check(const PalaceGrid& a, const PalaceGrid& b, const Window& window) {
  const int ka = a.k(), kb = b.k();
  if ((kb - ka) % 3 != 0)
    throw UsageError("fabric classes differ: k=" + std::to_string(ka) + " and k=" +
                     std::to_string(kb) + " are not congruent mod 3");
  const int shift = (kb - ka) / 3;
  Report report("fabric");
  report.parameters = {{"k_a", ka}, {"k_b", kb}, {"window", to_json(window)},
                       {"offset", {shift, shift}}, {"delta", kb - ka}};
  const auto diff = diff_grids(a, b, {shift, shift}, kb - ka);
  const auto f = diff.match_fraction(window);
  for (int y = window.y0; y < window.y1; ++y)
    for (int x = window.x0; x < window.x1; ++x)
      if (diff.mismatch_at(x, y)) report.fail_at({x, y});
  report.counters["cells"] = f.total;
  report.counters["matched"] = f.matched;
  report.details["match_fraction"] = f.value();
  return report;
}

Report fabric_class_check(int k_a, int k_b, const Window& window) {
  if ((k_b - k_a) % 3 != 0)
    throw UsageError("fabric classes differ: k=" + std::to_string(k_a) + " and k=" +
                     std::to_string(k_b) + " are not congruent mod 3");
  const int shift = (k_b - k_a) / 3;
  if (window.x0 < 0 || window.y0 < 0 || window.x0 >= window.x1 || window.y0 >= window.y1 ||
      window.x0 + shift < 0 || window.y0 + shift < 0)
    throw UsageError("fabric window is empty or shifts outside the game quadrant");
  const auto a = solve_grid(GameParams(k_a), window.x1, window.y1);
  const auto b = solve_grid(GameParams(k_b), window.x1 + std::max(0, shift),
                            window.y1 + std::max(0, shift));
  return fabric_class_check(a, b, window);
}

std::vector<ThreadRecord> thread_thickness(const PalaceGrid& grid, const Window& warp, int gap) {
  if (warp.width() <= 0 || warp.height() <= 0) return {};
  require_window(grid, warp);
  if (gap < 1) throw UsageError("thread gap must be at least 1");
  struct Run {
    int y0, y1;  // inclusive
    int count;
    int thread;
  };
  std::vector<ThreadRecord> threads;
  auto open_thread = [&](int x, std::vector<int> parents, bool split) {
    ThreadRecord t;
    t.id = static_cast<int>(threads.size());
    t.x_begin = x;
    t.parents = std::move(parents);
    t.split_from_parent = split;
    threads.push_back(std::move(t));
    return threads.back().id;
  };

  std::vector<Run> previous;
  for (int x = warp.x0; x < warp.x1; ++x) {
    std::vector<Run> current;
    for (int y = warp.y0; y < warp.y1;) {
      if (!grid.palace(x, y)) {
        ++y;
        continue;
      }
      // Palaces at most `gap` rows apart belong to one cluster.
      int end = y, count = 1;
      for (int next = y + 1; next < warp.y1 && next <= end + gap; ++next)
        if (grid.palace(x, next)) end = next, ++count;
      current.push_back({y, end, count, -1});
      y = end + 1;
    }
    auto touches = [gap](const Run& a, const Run& b) { return b.y0 <= a.y1 + gap && a.y0 <= b.y1 + gap; };
    std::vector<int> fan_out(previous.size(), 0);
    for (std::size_t i = 0; i < previous.size(); ++i)
      for (const auto& r : current) fan_out[i] += touches(previous[i], r);
    for (auto& r : current) {
      std::vector<std::size_t> links;
      for (std::size_t i = 0; i < previous.size(); ++i)
        if (touches(previous[i], r)) links.push_back(i);
      if (links.empty()) {
        r.thread = open_thread(x, {}, false);
      } else if (links.size() == 1 && fan_out[links[0]] == 1) {
        r.thread = previous[links[0]].thread;
      } else {
        std::set<int> parents;
        for (auto i : links) parents.insert(previous[i].thread);
        r.thread = open_thread(x, {parents.begin(), parents.end()}, links.size() == 1);
      }
      threads[r.thread].counts.push_back(r.count);
    }
    previous = std::move(current);
  }

  for (auto& t : threads) {
    t.constant = t.counts.size() >= 2 &&
                 std::all_of(t.counts.begin(), t.counts.end(), [&](int c) { return c == t.counts[0]; });
    if (t.constant) {
      for (int n = 1; fibonacci(n) <= t.counts[0]; ++n)
        if (fibonacci(n) == t.counts[0]) t.fibonacci = true;
    }
  }
  return threads;
}

Report thread_report(const std::vector<ThreadRecord>& threads, int min_length) {
  Report report("threads");
  report.parameters = {{"min_length", min_length}};
  std::int64_t long_threads = 0, constant = 0, fib = 0, merges = 0, merge_sums = 0;
  auto table = nlohmann::json::array();
  for (const auto& t : threads) {
    if (static_cast<int>(t.counts.size()) < min_length) continue;
    ++long_threads;
    if (t.constant) ++constant;
    if (t.constant && t.fibonacci) ++fib;
    nlohmann::json row = {{"id", t.id},
                          {"x_begin", t.x_begin},
                          {"columns", t.counts.size()},
                          {"constant", t.constant},
                          {"fibonacci", t.fibonacci}};
    if (t.constant) row["thickness"] = t.counts[0];
    if (!t.parents.empty()) row["parents"] = t.parents;
    // Merge additivity: a merged thread's thickness against its parents'.
    if (t.parents.size() >= 2 && t.constant) {
      bool all_constant = true;
      int sum = 0;
      for (int p : t.parents) {
        all_constant = all_constant && threads[p].constant;
        if (threads[p].constant) sum += threads[p].counts[0];
      }
      if (all_constant) {
        ++merges;
        if (sum == t.counts[0]) ++merge_sums;
        row["parent_sum"] = sum;
      }
    }
    table.push_back(std::move(row));
  }
  report.counters["threads"] = long_threads;
  report.counters["constant_threads"] = constant;
  report.counters["fibonacci_threads"] = fib;
  report.counters["tracked_merges"] = merges;
  report.counters["additive_merges"] = merge_sums;
  report.details["threads"] = std::move(table);
  return report;
}

}  // namespace blockq
