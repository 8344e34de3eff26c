#include "osc/report.hpp"

namespace osc {

bool Report::ok() const {
  for (auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

CheckResult& Report::add(std::string name) {
  checks.push_back(CheckResult{std::move(name), 0, {}});
  return checks.back();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["kind"] = kind;
  for (auto& [k, v] : params.items()) j[k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pairs_checked"] = c.pairs_checked;
    cj["failures"] = c.failures;
    j["checks"].push_back(cj);
  }
  if (!notes.empty()) j["notes"] = notes;
  for (auto& [k, v] : data.items()) j[k] = v;
  j["passed"] = ok();
  return j;
}

}  // namespace osc
