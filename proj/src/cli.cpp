#include "blockq/cli.hpp"

#include <charconv>
#include <chrono>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockq/analysis.hpp"
#include "blockq/ca.hpp"
#include "blockq/errors.hpp"
#include "blockq/fixtures.hpp"
#include "blockq/grid_io.hpp"
#include "blockq/render.hpp"
#include "blockq/skin.hpp"
#include "blockq/solver.hpp"

namespace blockq {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string::npos) return parts;
    start = end + 1;
  }
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw UsageError("malformed " + what + ": '" + text + "'");
  return value;
}

// Everything the subcommands read, validated before any computation.
struct RunConfig {
  int k = 0, width = 0, height = 0, size = 0, threads = 1;
  std::string engine = "dp";
  bool streaming = false;
  std::string in, out, a, b, window, fixtures, palette = "classic";
  int dx = 0, dy = 0, delta = 0;
  int x = 0, y = 0;
  std::string blocked;
  int limit = 1000, max = 7;
  std::string side = "left", region = "beyond";
  int depth = 64, gap = 0, kb = 0;
  bool quiet = false;
};

class Log {
 public:
  Log(std::ostream& err, const bool& quiet) : err_(err), quiet_(quiet) {}
  template <typename... Ts>
  void operator()(const Ts&... parts) const {
    if (quiet_) return;
    err_ << "blockq: ";
    (err_ << ... << parts);
    err_ << '\n';
  }

 private:
  std::ostream& err_;
  const bool& quiet_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int emit(std::ostream& out, const Report& report) {
  out << report.to_json().dump(2) << '\n';
  return report.passed ? kExitOk : kExitFailed;
}

void require_positive(int value, const std::string& name) {
  if (value < 1) throw UsageError("--" + name + " must be at least 1");
}

// Window from --window, else from the fixture file under (k, region).
Window resolve_window(const RunConfig& cfg, int k, const std::string& region) {
  if (!cfg.window.empty()) return parse_window(cfg.window);
  if (cfg.fixtures.empty())
    throw UsageError("give --window or --fixtures (region '" + region + "')");
  return load_fixtures(cfg.fixtures).window(k, region);
}

Report compare_grids(const std::string& operation, const PalaceGrid& expected,
                     const PalaceGrid& actual) {
  Report report(operation);
  for (int y = 0; y < expected.height(); ++y)
    for (int x = 0; x < expected.width(); ++x)
      if (expected(x, y) != actual(x, y)) report.fail_at({x, y});
  report.counters["cells"] = static_cast<std::int64_t>(expected.width()) * expected.height();
  report.counters["mismatches"] = report.offender_count;
  return report;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, const Log& log) {
  GameParams params(cfg.k);
  require_positive(cfg.width, "width");
  require_positive(cfg.height, "height");
  require_positive(cfg.threads, "threads");
  const auto start = std::chrono::steady_clock::now();
  PalaceGrid grid = cfg.engine == "ca"  ? run_ca(params, cfg.width, cfg.height, {cfg.threads})
                    : cfg.streaming     ? solve_grid_streaming(params, cfg.width, cfg.height)
                                        : solve_grid(params, cfg.width, cfg.height, {cfg.threads});
  save_grid(cfg.out, grid);
  log("solved k=", cfg.k, " ", cfg.width, "x", cfg.height, " with ", cfg.engine, " in ",
      seconds_since(start), " s");
  out << json{{"operation", "solve"}, {"k", cfg.k}, {"width", cfg.width}, {"height", cfg.height},
              {"engine", cfg.engine}, {"out", cfg.out}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int cmd_render(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const auto palette = Palette::named(cfg.palette);
  const auto grid = load_grid(cfg.in);
  write_file(cfg.out, render_image(grid, palette));
  log("rendered ", grid.width(), "x", grid.height(), " to ", cfg.out);
  out << json{{"operation", "render"}, {"in", cfg.in}, {"out", cfg.out}, {"palette", cfg.palette}}.dump(2)
      << '\n';
  return kExitOk;
}

int cmd_verify_ca(const RunConfig& cfg, std::ostream& out, const Log& log) {
  GameParams params(cfg.k);
  require_positive(cfg.size, "size");
  require_positive(cfg.threads, "threads");
  const auto start = std::chrono::steady_clock::now();
  const auto dp = solve_grid(params, cfg.size, cfg.size, {cfg.threads});
  const auto ca = run_ca(params, cfg.size, cfg.size, {cfg.threads});
  auto report = compare_grids("verify_ca", dp, ca);
  report.parameters = {{"k", cfg.k}, {"size", cfg.size}, {"threads", cfg.threads}};
  log("verify ca k=", cfg.k, " size=", cfg.size, ": ", report.offender_count, " mismatches in ",
      seconds_since(start), " s");
  return emit(out, report);
}

int cmd_verify_oracle(const RunConfig& cfg, std::ostream& out, const Log& log) {
  GameParams params(cfg.k);
  if (cfg.max < 0) throw UsageError("--max must be non-negative");
  OracleLimits limits;
  limits.max_coordinate = std::max(limits.max_coordinate, cfg.max);
  limits.max_k = std::max(limits.max_k, cfg.k);
  GameTreeSolver solver(params, limits);
  const auto grid = solve_grid(params, cfg.max + 1, cfg.max + 1);
  Report report("verify_oracle");
  report.parameters = {{"k", cfg.k}, {"max", cfg.max}};
  for (int y = 0; y <= cfg.max; ++y)
    for (int x = 0; x <= cfg.max; ++x)
      if (solver.is_p({x, y}) != grid.palace(x, y)) report.fail_at({x, y});
  report.counters["positions"] = static_cast<std::int64_t>(cfg.max + 1) * (cfg.max + 1);
  report.counters["memo_entries"] = static_cast<std::int64_t>(solver.memo_size());
  log("verify oracle k=", cfg.k, " max=", cfg.max, ": ", report.offender_count, " mismatches");
  return emit(out, report);
}

int cmd_verify_wythoff(const RunConfig& cfg, std::ostream& out, const Log& log) {
  if (cfg.limit < 0) throw UsageError("--limit must be non-negative");
  const int n = cfg.limit + 1;
  const auto grid = solve_grid(GameParams(1), n, n);
  std::vector<std::uint8_t> beatty(static_cast<std::size_t>(n) * n, 0);
  std::int64_t pairs = 0;
  for (std::int64_t i = 0;; ++i) {
    const auto pair = wythoff_closed_form(i);
    if (pair.lower.x > cfg.limit) break;
    ++pairs;
    for (auto p : {pair.lower, pair.mirror})
      if (p.x <= cfg.limit && p.y <= cfg.limit) beatty[static_cast<std::size_t>(p.y) * n + p.x] = 1;
  }
  Report report("verify_wythoff");
  report.parameters = {{"limit", cfg.limit}};
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (grid.palace(x, y) != (beatty[static_cast<std::size_t>(y) * n + x] != 0)) report.fail_at({x, y});
  report.counters["pairs"] = pairs;
  log("verify wythoff limit=", cfg.limit, ": ", report.offender_count, " mismatches");
  return emit(out, report);
}

int cmd_diff(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const auto a = load_grid(cfg.a);
  const auto b = load_grid(cfg.b);
  const auto diff = diff_grids(a, b, {cfg.dx, cfg.dy}, cfg.delta);
  Report report("diff");
  report.parameters = {{"a", cfg.a}, {"b", cfg.b}, {"offset", {cfg.dx, cfg.dy}}, {"delta", cfg.delta}};
  report.details["overlap"] = to_json(diff.overlap);
  report.counters["overlap_mismatches"] = diff.mismatches();
  const Window scope = cfg.window.empty() ? diff.overlap : parse_window(cfg.window);
  const auto f = diff.match_fraction(scope);
  report.details["window"] = to_json(scope);
  report.details["match_fraction"] = f.value();
  report.counters["window_cells"] = f.total;
  report.counters["window_matched"] = f.matched;
  // Without a window the diff is descriptive; with one it asserts a perfect match.
  if (!cfg.window.empty())
    for (int y = scope.y0; y < scope.y1; ++y)
      for (int x = scope.x0; x < scope.x1; ++x)
        if (diff.mismatch_at(x, y)) report.fail_at({x, y});
  if (!cfg.out.empty()) {
    write_file(cfg.out, render_mask(diff, Palette::named(cfg.palette)));
    log("mask written to ", cfg.out);
  }
  return emit(out, report);
}

int cmd_analyze_hood(const RunConfig& cfg, std::ostream& out, const Log&) {
  return emit(out, hood_check(load_grid(cfg.in)));
}

int cmd_analyze_epaulette(const RunConfig& cfg, std::ostream& out, const Log&) {
  if (cfg.side != "left" && cfg.side != "upper") throw UsageError("--side must be left or upper");
  const auto grid = load_grid(cfg.in);
  const auto window = resolve_window(cfg, grid.k(), "epaulette_" + cfg.side);
  return emit(out, epaulette_check(grid, window,
                                   cfg.side == "left" ? EpauletteSide::left : EpauletteSide::upper));
}

int cmd_analyze_histogram(const RunConfig& cfg, std::ostream& out, const Log&) {
  const auto grid = load_grid(cfg.in);
  Region region;
  std::string name = cfg.region;
  if (!cfg.window.empty()) {
    region = window_region(parse_window(cfg.window));
    name = "window";
  } else if (cfg.region == "hood") {
    region = hood_region(grid.k());
  } else if (cfg.region == "beyond") {
    region = beyond_hood_region(grid.k());
  } else {
    throw UsageError("--region must be hood or beyond");
  }
  const auto histogram = state_histogram(grid, region);
  Report report("histogram");
  report.parameters = {{"k", grid.k()}, {"region", name}};
  json states = json::object();
  for (auto [state, count] : histogram) states[std::to_string(state)] = count;
  report.details["states"] = std::move(states);
  if (!histogram.empty()) {
    report.details["min_state"] = histogram.begin()->first;
    report.details["max_state"] = histogram.rbegin()->first;
  }
  report.counters["distinct_states"] = static_cast<std::int64_t>(histogram.size());
  return emit(out, report);
}

json measurement_json(const SkinMeasurement& m) {
  return {{"level", m.level},
          {"x", {m.x_begin, m.x_end}},
          {"y", {m.y_begin, m.y_end}},
          {"vertical_thickness", m.vertical_thickness},
          {"emission_columns", m.emission_columns},
          {"diagonal_thickness", m.diagonal_thickness},
          {"horizontal_thickness", m.horizontal_thickness},
          {"horizontal_period", m.horizontal_period},
          {"vertical_period", m.vertical_period},
          {"step_sequence", format_steps(m.step_sequence)},
          {"steps", m.steps},
          {"matches_fibonacci_table", m.matches_fibonacci_table()},
          {"matches_substitution", m.matches_substitution()}};
}

int cmd_analyze_skin(const RunConfig& cfg, std::ostream& out, const Log&) {
  const auto grid = load_grid(cfg.in);
  const auto band = resolve_window(cfg, grid.k(), "skin_band");
  const auto analysis = skin_analyze(skin_band_from_grid(grid, band, cfg.depth));
  Report report("skin");
  report.parameters = {{"k", grid.k()}, {"band", to_json(band)}, {"depth", cfg.depth}};
  auto levels = json::array();
  bool metrics_ok = !analysis.measurements.empty();
  for (const auto& m : analysis.measurements) {
    levels.push_back(measurement_json(m));
    metrics_ok = metrics_ok && m.matches_fibonacci_table();
  }
  auto transitions = json::array();
  for (const auto& t : analysis.transitions)
    transitions.push_back({{"from", t.from_level}, {"to", t.to_level}, {"x", t.x}, {"extent", t.extent}, {"y", t.y}});
  // Each level's step period must be the level-fold substitution of "2".
  bool factor = !analysis.measurements.empty();
  for (const auto& m : analysis.measurements) factor = factor && m.matches_substitution();
  report.details["levels"] = std::move(levels);
  report.details["transitions"] = std::move(transitions);
  report.details["all_steps_2_or_3"] = analysis.all_steps_2_or_3;
  report.details["step_periods_follow_substitution"] = factor;
  if (!analysis.diagnostic.empty()) report.details["diagnostic"] = analysis.diagnostic;
  report.counters["steps"] = static_cast<std::int64_t>(analysis.steps.size());
  report.passed = metrics_ok && analysis.all_steps_2_or_3 && factor;
  return emit(out, report);
}

int cmd_analyze_threads(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const auto grid = load_grid(cfg.in);
  const auto warp = resolve_window(cfg, grid.k(), "warp");
  int gap = cfg.gap;
  if (gap == 0) gap = cfg.fixtures.empty() ? 3 : load_fixtures(cfg.fixtures).thread_gap;
  auto report = thread_report(thread_thickness(grid, warp, gap));
  report.parameters["window"] = to_json(warp);
  report.parameters["gap"] = gap;
  out << report.to_json().dump(2) << '\n';
  if (!report.passed) log("thread table has offenders; threads are report-only");
  return kExitOk;
}

int cmd_analyze_fabric(const RunConfig& cfg, std::ostream& out, const Log&) {
  const auto a = load_grid(cfg.in);
  const auto window = resolve_window(cfg, a.k(), "fabric");
  if (!cfg.b.empty()) return emit(out, fabric_class_check(a, load_grid(cfg.b), window));
  if (cfg.kb < 1) throw UsageError("analyze fabric needs --b FILE or --kb K");
  return emit(out, fabric_class_check(a.k(), cfg.kb, window));
}

int cmd_move(const RunConfig& cfg, std::ostream& out, const Log&) {
  GameParams params(cfg.k);
  if (cfg.x < 0 || cfg.y < 0) throw UsageError("queen coordinates must be non-negative");
  const auto blocked = parse_blocked(cfg.blocked);
  if (static_cast<int>(blocked.size()) > cfg.k - 1)
    throw UsageError("at most k-1 = " + std::to_string(cfg.k - 1) + " blocked moves");
  if (blocked.count({cfg.x, cfg.y})) throw UsageError("the queen cannot share a cell with a pawn");
  const auto grid = solve_grid(params, cfg.x + 1, cfg.y + 1);
  const auto move = winning_move(params, {cfg.x, cfg.y}, blocked, grid);
  if (!move) {
    out << "no winning move\n";
    return kExitOk;
  }
  out << "move " << move->move.x << ',' << move->move.y << " block ";
  bool first = true;
  for (const auto& p : move->block) {
    out << (first ? "" : ";") << p.x << ',' << p.y;
    first = false;
  }
  if (move->block.empty()) out << "none";
  out << '\n';
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, const Log& log) {
  GameParams params(cfg.k);
  require_positive(cfg.size, "size");
  require_positive(cfg.threads, "threads");
  const auto n = static_cast<std::int64_t>(cfg.size);
  const auto start = std::chrono::steady_clock::now();
  std::int64_t checksum = 0;
  std::int64_t working_set = 0;
  if (cfg.streaming) {
    RowStream stream(params, cfg.size);
    std::vector<PalaceNumber> row;
    for (int y = 0; y < cfg.size; ++y) {
      stream.next(row);
      checksum += row[static_cast<std::size_t>(y)];
    }
    // Column and diagonal counters plus the row buffer.
    working_set = static_cast<std::int64_t>(sizeof(int)) * (2 * n + 1) +
                  static_cast<std::int64_t>(sizeof(PalaceNumber)) * n;
  } else {
    const auto grid = solve_grid(params, cfg.size, cfg.size, {cfg.threads});
    for (int i = 0; i < cfg.size; ++i) checksum += grid(i, i);
    working_set = static_cast<std::int64_t>(sizeof(PalaceNumber)) * n * n +
                  static_cast<std::int64_t>(sizeof(int)) * (4 * n);
  }
  const double secs = seconds_since(start);
  log("bench k=", cfg.k, " size=", cfg.size, ": ", secs, " s");
  out << json{{"operation", "bench"},
              {"k", cfg.k},
              {"size", cfg.size},
              {"mode", cfg.streaming ? "streaming" : "grid"},
              {"threads", cfg.streaming ? 1 : cfg.threads},
              {"seconds", secs},
              {"cells_per_second", secs > 0 ? static_cast<double>(n * n) / secs : 0.0},
              {"peak_working_set_bytes", working_set},
              {"diagonal_checksum", checksum}}
             .dump(2)
      << '\n';
  return kExitOk;
}

}  // namespace

Window parse_window(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("window must be x0,y0,x1,y1: '" + text + "'");
  Window w{parse_int(parts[0], "window"), parse_int(parts[1], "window"), parse_int(parts[2], "window"),
           parse_int(parts[3], "window")};
  if (w.x0 < 0 || w.y0 < 0 || w.x0 >= w.x1 || w.y0 >= w.y1)
    throw UsageError("window must satisfy 0 <= x0 < x1 and 0 <= y0 < y1: '" + text + "'");
  return w;
}

BlockedSet parse_blocked(const std::string& text) {
  BlockedSet blocked;
  if (text.empty()) return blocked;
  for (const auto& item : split(text, ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2) throw UsageError("blocked cell must be x,y: '" + item + "'");
    Position p{parse_int(xy[0], "blocked cell"), parse_int(xy[1], "blocked cell")};
    if (p.x < 0 || p.y < 0) throw UsageError("blocked cell must be non-negative: '" + item + "'");
    if (!blocked.insert(p).second) throw UsageError("duplicate blocked cell: '" + item + "'");
  }
  return blocked;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Log log(err, cfg.quiet);
  CLI::App app{"Palace-number grids for k-blocking Wythoff Nim", "blockq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-q,--quiet", cfg.quiet, "Suppress log lines on stderr");

  std::function<int()> action;
  auto on = [&](CLI::App* cmd, int (*fn)(const RunConfig&, std::ostream&, const Log&)) {
    cmd->callback([&action, &cfg, &out, &log, fn] { action = [&cfg, &out, &log, fn] { return fn(cfg, out, log); }; });
  };
  auto add_k = [&](CLI::App* cmd) { cmd->add_option("--k", cfg.k, "Blocking parameter k >= 1")->required(); };
  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--window", cfg.window, "Window x0,y0,x1,y1 (half-open)");
    cmd->add_option("--fixtures", cfg.fixtures, "Fixture JSON with pinned windows")->check(CLI::ExistingFile);
  };

  auto* solve = app.add_subcommand("solve", "Compute a palace-number grid into a BQG1 file");
  add_k(solve);
  solve->add_option("--width", cfg.width)->required();
  solve->add_option("--height", cfg.height)->required();
  solve->add_option("--out", cfg.out, "Output BQG1 file")->required();
  solve->add_option("--engine", cfg.engine, "dp (direct) or ca (cellular automaton)")
      ->check(CLI::IsMember({"dp", "ca"}));
  solve->add_option("--threads", cfg.threads, "Worker threads (output is identical)");
  solve->add_flag("--streaming", cfg.streaming, "Row-streaming solver (dp engine)");
  on(solve, cmd_solve);

  auto* render = app.add_subcommand("render", "Render a BQG1 grid as binary PPM");
  render->add_option("--in", cfg.in)->required()->check(CLI::ExistingFile);
  render->add_option("--out", cfg.out)->required();
  render->add_option("--palette", cfg.palette);
  on(render, cmd_render);

  auto* verify = app.add_subcommand("verify", "Cross-check independent computations");
  verify->require_subcommand(1);
  auto* verify_ca = verify->add_subcommand("ca", "Cellular automaton against the direct solver");
  add_k(verify_ca);
  verify_ca->add_option("--size", cfg.size)->required();
  verify_ca->add_option("--threads", cfg.threads);
  on(verify_ca, cmd_verify_ca);
  auto* verify_oracle = verify->add_subcommand("oracle", "Game-tree search against the direct solver");
  add_k(verify_oracle);
  verify_oracle->add_option("--max", cfg.max, "Largest coordinate checked");
  on(verify_oracle, cmd_verify_oracle);
  auto* verify_wythoff = verify->add_subcommand("wythoff", "Beatty pairs against the k=1 grid");
  verify_wythoff->add_option("--limit", cfg.limit, "Largest coordinate checked");
  on(verify_wythoff, cmd_verify_wythoff);

  auto* diff = app.add_subcommand("diff", "Compare grid b, shifted and offset, against grid a");
  diff->add_option("--a", cfg.a)->required()->check(CLI::ExistingFile);
  diff->add_option("--b", cfg.b)->required()->check(CLI::ExistingFile);
  diff->add_option("--dx", cfg.dx)->required();
  diff->add_option("--dy", cfg.dy)->required();
  diff->add_option("--delta", cfg.delta)->required();
  diff->add_option("--out", cfg.out, "Mask PPM (mismatches white)");
  diff->add_option("--window", cfg.window, "Assert a perfect match inside x0,y0,x1,y1");
  diff->add_option("--palette", cfg.palette);
  on(diff, cmd_diff);

  auto* analyze = app.add_subcommand("analyze", "Structural checks on a BQG1 grid");
  analyze->require_subcommand(1);
  auto add_in = [&](CLI::App* cmd) { cmd->add_option("--in", cfg.in)->required()->check(CLI::ExistingFile); };
  auto* hood = analyze->add_subcommand("hood", "Hood formula, shoulders and nose");
  add_in(hood);
  on(hood, cmd_analyze_hood);
  auto* epaulette = analyze->add_subcommand("epaulette", "Epaulette periods and census");
  add_in(epaulette);
  add_window(epaulette);
  epaulette->add_option("--side", cfg.side, "left or upper");
  on(epaulette, cmd_analyze_epaulette);
  auto* histogram = analyze->add_subcommand("histogram", "State census over a region");
  add_in(histogram);
  add_window(histogram);
  histogram->add_option("--region", cfg.region, "hood or beyond (ignored with --window)");
  on(histogram, cmd_analyze_histogram);
  auto* skin = analyze->add_subcommand("skin", "Skin metrics of the top arm");
  add_in(skin);
  add_window(skin);
  skin->add_option("--depth", cfg.depth, "Rows captured below outer space");
  on(skin, cmd_analyze_skin);
  auto* threads = analyze->add_subcommand("threads", "Per-column palace counts of warp threads (report only)");
  add_in(threads);
  add_window(threads);
  threads->add_option("--gap", cfg.gap, "Largest row gap inside one thread");
  on(threads, cmd_analyze_threads);
  auto* fabric = analyze->add_subcommand("fabric", "Fabric identity between games congruent mod 3");
  add_in(fabric);
  add_window(fabric);
  fabric->add_option("--b", cfg.b, "Grid of the second game")->check(CLI::ExistingFile);
  fabric->add_option("--kb", cfg.kb, "Solve the second game instead of reading --b");
  on(fabric, cmd_analyze_fabric);

  auto* move = app.add_subcommand("move", "Winning move and blocking set from a position");
  add_k(move);
  move->add_option("--x", cfg.x)->required();
  move->add_option("--y", cfg.y)->required();
  move->add_option("--blocked", cfg.blocked, "Blocked moves \"x1,y1;x2,y2\"");
  on(move, cmd_move);

  auto* bench = app.add_subcommand("bench", "Solver throughput");
  add_k(bench);
  bench->add_option("--size", cfg.size)->required();
  bench->add_option("--threads", cfg.threads);
  bench->add_flag("--streaming", cfg.streaming, "Row-streaming solver");
  on(bench, cmd_bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "blockq: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "blockq: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "blockq: " << e.what() << '\n';
  } catch (const std::system_error& e) {
    err << "blockq: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace blockq
