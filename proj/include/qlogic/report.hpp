#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qlogic {

/// Outcome of one CLI command. status: 0 success/true, 1 property false,
/// 2 input error.
struct Report {
  std::string command;
  std::vector<std::string> inputs;
  int status = 0;
  std::string message;
  nlohmann::json result;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
/// Throws InputError if a required field is missing or mistyped.
Report report_from_json(const nlohmann::json& j);

}  // namespace qlogic
