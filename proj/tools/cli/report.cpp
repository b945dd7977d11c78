#include <stdexcept>

#include "cli.hpp"

namespace arcline::cli {
namespace {

bool reserved(const std::string& key) { return key == "command" || key == "inputs" || key == "wall_time_ms"; }

}  // namespace

Json RunReport::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  for (const auto& [key, value] : payload.items()) {
    if (reserved(key)) throw std::logic_error("payload key '" + key + "' collides with a report field");
    j[key] = value;
  }
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

RunReport RunReport::from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  for (const auto& [key, value] : j.items()) {
    if (!reserved(key)) r.payload[key] = value;
  }
  return r;
}

}  // namespace arcline::cli
