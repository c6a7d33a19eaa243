#pragma once

#include <nlohmann/json.hpp>

#include "instanton/propagator.hpp"

namespace instanton {

nlohmann::json to_json(const TunnelingReport& r);

} // namespace instanton
