#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace arcline::cli {

using Json = nlohmann::ordered_json;

/// One command's result. Serialized flat: command, inputs, the payload keys
/// in insertion order, then wall_time_ms. Big integers are decimal strings.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json payload = Json::object();
  double wall_time_ms = 0.0;

  Json to_json() const;
  static RunReport from_json(const Json& j);
};

struct Outcome {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage or parse error
  std::string out;
  std::string err;
  std::optional<RunReport> report;
};

/// Parses args (program name excluded), runs one subcommand and renders its
/// output. Never throws for bad input.
Outcome dispatch(const std::vector<std::string>& args);

}  // namespace arcline::cli
