#include "blockq/report.hpp"

namespace blockq {

void Report::fail_at(Position p) {
  passed = false;
  ++offender_count;
  if (offenders.size() < kMaxOffenders) offenders.push_back(p);
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["operation"] = operation;
  out["parameters"] = parameters;
  out["passed"] = passed;
  out["counters"] = counters;
  auto list = nlohmann::json::array();
  for (const auto& p : offenders) list.push_back(blockq::to_json(p));
  out["offenders"] = std::move(list);
  out["offender_count"] = offender_count;
  if (!details.empty()) out["details"] = details;
  return out;
}

nlohmann::json to_json(const Window& w) { return {w.x0, w.y0, w.x1, w.y1}; }

nlohmann::json to_json(Position p) { return {p.x, p.y}; }

}  // namespace blockq
