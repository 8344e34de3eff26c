#pragma once

#include <deque>
#include <json.hpp>
#include <string>
#include <vector>

namespace osc {

struct CheckResult {
  std::string name;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct Report {
  std::string kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::deque<CheckResult> checks;  // deque: references from add() stay valid
  std::vector<std::string> notes;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();  // check-specific payload

  bool ok() const;
  nlohmann::ordered_json to_json() const;
  CheckResult& add(std::string name);
};

}  // namespace osc
