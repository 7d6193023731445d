#include "blockq/skin.hpp"

#include <algorithm>
#include <map>

#include "blockq/errors.hpp"
#include "blockq/solver.hpp"

namespace blockq {

std::int64_t fibonacci(int n) {
  if (n < 0) throw UsageError("fibonacci index must be >= 0");
  std::int64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::int64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

StepSequence step_substitution(const StepSequence& seed, int iterations) {
  if (iterations < 0) throw UsageError("iterations must be >= 0");
  StepSequence current = seed;
  for (int s : current)
    if (s != 2 && s != 3) throw UsageError("step symbols must be 2 or 3");
  for (int i = 0; i < iterations; ++i) {
    StepSequence next;
    next.reserve(current.size() * 3);
    for (int s : current) {
      next.push_back(2);
      next.push_back(3);
      if (s == 3) next.push_back(3);
    }
    current = std::move(next);
  }
  return current;
}

bool is_factor(const StepSequence& needle, const StepSequence& haystack) {
  if (needle.empty()) return true;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

std::optional<int> factor_level(const StepSequence& needle, int max_iterations) {
  StepSequence word{2};
  for (int m = 0; m <= max_iterations; ++m) {
    if (is_factor(needle, word)) return m;
    word = step_substitution(word, 1);
  }
  return std::nullopt;
}

StepSequence parse_steps(const std::string& text) {
  StepSequence out;
  for (char ch : text) {
    if (ch == '2' || ch == '3')
      out.push_back(ch - '0');
    else if (ch != ' ' && ch != ',')
      throw UsageError(std::string("step symbol '") + ch + "' is not 2 or 3");
  }
  return out;
}

std::string format_steps(const StepSequence& steps) {
  std::string out;
  out.reserve(steps.size());
  for (int s : steps) out.push_back(static_cast<char>('0' + s));
  return out;
}

bool SkinBand::has(int x) const {
  return x >= x_begin && x < x_end() && top[x - x_begin] >= 0;
}

std::optional<std::int32_t> SkinBand::value(int x, int y) const {
  if (!has(x)) return std::nullopt;
  const int t = top[x - x_begin];
  if (y < t) return k;
  const auto& column = cells[x - x_begin];
  if (y - t >= static_cast<int>(column.size())) return std::nullopt;
  return column[y - t];
}

SkinBand skin_band_from_grid(const PalaceGrid& grid, const Window& band, int depth) {
  require_window(grid, band);
  SkinBand out;
  out.k = grid.k();
  out.x_begin = band.x0;
  out.depth = depth;
  out.top.assign(band.width(), -1);
  out.cells.resize(band.width());
  for (int x = band.x0; x < band.x1; ++x) {
    for (int y = band.y0; y < band.y1; ++y) {
      if (grid(x, y) == grid.k()) continue;
      out.top[x - band.x0] = y;
      for (int r = y; r < std::min(grid.height(), y + depth); ++r)
        out.cells[x - band.x0].push_back(grid(x, r));
      break;
    }
  }
  return out;
}

SkinBand capture_skin_band(int k, int x_begin, int x_end, int depth, int max_rows) {
  if (x_begin < 0 || x_end <= x_begin) throw UsageError("skin band column range is empty");
  SkinBand out;
  out.k = k;
  out.x_begin = x_begin;
  out.depth = depth;
  out.top.assign(x_end - x_begin, -1);
  out.cells.resize(x_end - x_begin);

  RowStream stream(GameParams(k), x_end);
  std::vector<PalaceNumber> row;
  int pending = x_end - x_begin;
  for (int y = 0; y < max_rows && pending > 0; ++y) {
    stream.next(row);
    for (int x = x_begin; x < x_end; ++x) {
      const int i = x - x_begin;
      if (out.top[i] < 0) {
        if (row[x] == k) continue;
        out.top[i] = y;
      }
      auto& column = out.cells[i];
      if (static_cast<int>(column.size()) < depth) {
        column.push_back(row[x]);
        if (static_cast<int>(column.size()) == depth) --pending;
      }
    }
  }
  return out;
}

namespace {

struct Step {
  int x = 0;      // first column
  int width = 0;
  int row = 0;    // contact row
  int horizontal = 0;
  int level = 0;
};

int level_for_horizontal(int h) {
  for (int n = 1; n <= 20; ++n) {
    const auto f = fibonacci(2 * n + 2);
    if (f == h) return n;
    if (f > h) break;
  }
  return 0;
}

template <typename Counts>
int mode_of(const Counts& counts) {
  int best = 0, best_count = -1;
  for (const auto& [value, count] : counts)
    if (count > best_count) {
      best = value;
      best_count = count;
    }
  return best;
}

StepSequence least_rotation(const StepSequence& s) {
  StepSequence best = s;
  StepSequence r = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best) best = r;
  }
  return best;
}

// Contiguous palaces starting at (x, y) and walking by (dx, dy).
int run_length(const SkinBand& band, int x, int y, int dx, int dy) {
  int n = 0;
  for (;;) {
    const auto v = band.value(x, y);
    if (!v || *v >= band.k) return n;
    ++n;
    x += dx;
    y += dy;
  }
}

SkinMeasurement measure(const SkinBand& band, const std::vector<Step>& steps, std::size_t first,
                        std::size_t last) {
  SkinMeasurement m;
  m.level = steps[first].level;
  m.x_begin = steps[first].x;
  m.x_end = steps[last].x + steps[last].width;
  m.y_begin = steps[first].row;
  m.y_end = steps[last].row + 1;
  m.steps = static_cast<int>(last - first + 1);

  std::map<int, int> horizontal;
  for (std::size_t i = first; i <= last; ++i) ++horizontal[steps[i].horizontal];
  m.horizontal_thickness = mode_of(horizontal);

  std::map<int, int> vertical, diagonal;
  for (int x = m.x_begin; x < m.x_end; ++x) {
    const int t = band.top[x - band.x_begin];
    ++vertical[run_length(band, x, t, 0, 1)];
    // A column's contact cell starts a (1,1) diagonal unless the column
    // opens a new step, in which case the diagonal entered one column left.
    if (band.has(x - 1) && band.top[x - 1 - band.x_begin] < t) continue;
    ++diagonal[run_length(band, x, t, 1, 1)];
  }
  m.vertical_thickness = mode_of(vertical);
  m.emission_columns = vertical.count(m.vertical_thickness + 1) ? vertical[m.vertical_thickness + 1] : 0;
  m.diagonal_thickness = mode_of(diagonal);

  const std::size_t count = last - first + 1;
  for (std::size_t p = 1; 2 * p <= count; ++p) {
    bool periodic = true;
    for (std::size_t i = first; i + p <= last && periodic; ++i)
      periodic = steps[i].width == steps[i + p].width;
    if (!periodic) continue;
    m.vertical_period = static_cast<int>(p);
    StepSequence block;
    for (std::size_t i = first; i < first + p; ++i) {
      m.horizontal_period += steps[i].width;
      block.push_back(steps[i].width);
    }
    m.step_sequence = least_rotation(block);
    break;
  }
  return m;
}

}  // namespace

bool SkinMeasurement::matches_fibonacci_table() const {
  if (level < 1) return false;
  const int n = level;
  return vertical_thickness == fibonacci(2 * n) && diagonal_thickness == fibonacci(2 * n + 1) &&
         horizontal_thickness == fibonacci(2 * n + 2) &&
         horizontal_period == fibonacci(2 * n + 3) && vertical_period == fibonacci(2 * n + 1);
}

bool SkinMeasurement::matches_substitution() const {
  if (level < 0 || level > 20) return false;
  const auto word = step_substitution({2}, level);
  if (word.size() != step_sequence.size()) return false;
  for (std::size_t shift = 0; shift < word.size(); ++shift)
    if (std::equal(word.begin() + static_cast<std::ptrdiff_t>(shift), word.end(), step_sequence.begin()) &&
        std::equal(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(shift),
                   step_sequence.end() - static_cast<std::ptrdiff_t>(shift)))
      return true;
  return false;
}

SkinAnalysis skin_analyze(const SkinBand& band) {
  SkinAnalysis out;

  std::vector<Step> steps;
  for (int x = band.x_begin; x < band.x_end(); ++x) {
    if (!band.has(x)) continue;
    const int t = band.top[x - band.x_begin];
    if (!steps.empty() && steps.back().row == t && steps.back().x + steps.back().width == x) {
      ++steps.back().width;
      continue;
    }
    steps.push_back({x, 1, t, 0, 0});
  }
  // The outermost steps may be cut by the band edges.
  if (steps.size() < 3) {
    out.diagnostic = "no skin contact found in band";
    return out;
  }
  steps.erase(steps.begin());
  steps.pop_back();

  out.first_step_x = steps.front().x;
  out.all_steps_2_or_3 = true;
  for (auto& s : steps) {
    out.steps.push_back(s.width);
    if (s.width != 2 && s.width != 3) out.all_steps_2_or_3 = false;
    s.horizontal = run_length(band, s.x + s.width - 1, s.row, -1, 0);
    s.level = level_for_horizontal(s.horizontal);
  }

  for (std::size_t i = 0; i < steps.size();) {
    std::size_t j = i;
    while (j + 1 < steps.size() && steps[j + 1].level == steps[i].level) ++j;
    const int n = steps[i].level;
    // A level counts once it has held for two vertical periods.
    if (n > 0 && static_cast<std::int64_t>(j - i + 1) >= 2 * fibonacci(2 * n + 1))
      out.measurements.push_back(measure(band, steps, i, j));
    i = j + 1;
  }
  for (std::size_t i = 1; i < out.measurements.size(); ++i) {
    const auto& a = out.measurements[i - 1];
    const auto& b = out.measurements[i];
    if (a.level == b.level) continue;
    out.transitions.push_back({a.level, b.level, b.x_begin, b.x_begin - band.k, b.y_begin});
  }
  if (out.measurements.empty()) out.diagnostic = "no stable skin level found in band";
  return out;
}

SkinAnalysis skin_analyze(const PalaceGrid& grid, const Window& band) {
  return skin_analyze(skin_band_from_grid(grid, band));
}

}  // namespace blockq
