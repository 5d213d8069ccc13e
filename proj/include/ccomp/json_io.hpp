#pragma once

#include <json.hpp>

#include "ccomp/schemes.hpp"
#include "ccomp/simulator.hpp"

namespace ccomp {

using json = nlohmann::json;

// Plans serialize with every query point, anchor, and decode field, enough to
// re-run decoding offline from the JSON alone.
json plan_to_json(const QueryPlan& plan);
QueryPlan plan_from_json(const json& j);

json report_to_json(const RunReport& report);

}  // namespace ccomp
