#include "blockq/fixtures.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blockq/errors.hpp"

namespace blockq {

namespace {

Window window_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("window must be [x0, y0, x1, y1]", 0);
  Window w{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
  if (w.x0 < 0 || w.y0 < 0 || w.width() <= 0 || w.height() <= 0) throw FormatError("empty or negative window", 0);
  return w;
}

}  // namespace

Window Fixtures::window(int k, const std::string& region) const {
  auto it = windows.find({k, region});
  if (it == windows.end()) throw UsageError("no fixture window '" + region + "' for k=" + std::to_string(k));
  return it->second;
}

Fixtures parse_fixtures(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("fixtures: ") + e.what(), e.byte);
  }
  Fixtures f;
  try {
    f.version = j.at("version").get<int>();
    for (const auto& [key, regions] : j.at("windows").items()) {
      int k = std::stoi(key);
      for (const auto& [name, w] : regions.items()) f.windows[{k, name}] = window_from(w);
    }
    f.thread_gap = j.value("thread_gap", 3);
    for (const auto& d : j.value("diffs", nlohmann::json::array())) {
      DiffFixture df;
      df.k_a = d.at("a").get<int>();
      df.k_b = d.at("b").get<int>();
      df.offset = {d.at("offset").at(0).get<int>(), d.at("offset").at(1).get<int>()};
      df.delta = d.at("delta").get<int>();
      df.size = d.at("size").get<int>();
      df.regions = d.at("regions").get<std::vector<std::string>>();
      f.diffs.push_back(std::move(df));
    }
    for (const auto& c : j.value("fabric_classes", nlohmann::json::array()))
      f.fabric_classes.push_back({c.at("a").get<int>(), c.at("b").get<int>(), c.at("region").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("fixtures: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw FormatError("fixtures: window keys must be integers", 0);
  }
  return f;
}

Fixtures load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixtures " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixtures(buf.str());
}

}  // namespace blockq
