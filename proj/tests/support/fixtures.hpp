#pragma once

#include <fstream>
#include <string>

#include "transit/json_io.hpp"

namespace fixture {

inline transit::json load(const std::string& name) {
  std::ifstream in(std::string(TRANSIT_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return transit::json::parse(in);
}

inline transit::TransitFunction transit(const std::string& name) { return transit::transit_from_json(load(name)); }

}  // namespace fixture
