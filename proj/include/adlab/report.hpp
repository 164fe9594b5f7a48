#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "adlab/groundset.hpp"

namespace adlab {

using json = nlohmann::ordered_json;

// One measured instance of an inequality. `fitted_constant` is the constant
// the inequality needs on this instance (see the claim's direction).
struct ExperimentReport {
  std::string claim_id;
  json instance = json::object();
  json params = json::object();
  double fitted_constant = 0.0;
  json witnesses = json::object();
  bool violated = false;
};

json to_json(const ExperimentReport& r);

// JSON has no inf/nan; those become strings
json num(double x);

// {"ambient": "z d=1", "set": "{1,2,3}"}
json set_json(const GroundSet& a);

}  // namespace adlab
