#pragma once

#include <json.hpp>

#include "diffeo/report.hpp"
#include "diffeo/series.hpp"

namespace diffeo {

using Json = nlohmann::ordered_json;

// {"kind":"egf"|"ogf","variable":"t","truncation":N,
//  "coefficients":[{"n":0,"poly":"0"},...]}
Json series_to_json(const Series& series);
Series series_from_json(const Json& json);

Json report_to_json(const Report& report);

}  // namespace diffeo
