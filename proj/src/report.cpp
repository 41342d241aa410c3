#include "qlogic/report.hpp"

#include "qlogic/errors.hpp"

namespace qlogic {

nlohmann::json to_json(const Report& r) {
  return {{"command", r.command},
          {"inputs", r.inputs},
          {"status", r.status},
          {"message", r.message},
          {"result", r.result}};
}

Report report_from_json(const nlohmann::json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    r.status = j.at("status").get<int>();
    r.message = j.at("message").get<std::string>();
    r.result = j.at("result");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qlogic
