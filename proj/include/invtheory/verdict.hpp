#pragma once

#include <string>

#include <json.hpp>

namespace invtheory {

/// One checked statement: lhs and rhs of an inequality or identity plus the
/// outcome. Rows with asserted = false record data without gating.
struct Verdict {
  std::string theorem;
  std::string instance;
  nlohmann::json lhs;
  nlohmann::json rhs;
  bool holds = false;
  bool asserted = true;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const {
    nlohmann::json j{{"theorem", theorem}, {"instance", instance}, {"lhs", lhs}, {"rhs", rhs}, {"holds", holds}};
    if (!asserted) j["asserted"] = false;
    if (!details.empty()) j["details"] = details;
    return j;
  }
};

}  // namespace invtheory
