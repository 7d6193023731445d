#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockq/grid.hpp"

namespace blockq {

// Outcome of a structural check, serialized as JSON for the CLI.
struct Report {
  static constexpr std::size_t kMaxOffenders = 100;

  std::string operation;
  nlohmann::json parameters = nlohmann::json::object();
  bool passed = true;
  std::map<std::string, std::int64_t> counters;
  std::vector<Position> offenders;  // first kMaxOffenders only
  std::int64_t offender_count = 0;
  nlohmann::json details = nlohmann::json::object();

  explicit Report(std::string op) : operation(std::move(op)) {}

  // Records a failing position and marks the report failed.
  void fail_at(Position p);

  nlohmann::json to_json() const;
};

nlohmann::json to_json(const Window& w);
nlohmann::json to_json(Position p);

}  // namespace blockq
