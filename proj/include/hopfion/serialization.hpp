#pragma once

#include <json.hpp>

#include "hopfion/energy.hpp"
#include "hopfion/topology.hpp"
#include "hopfion/verify.hpp"

namespace hopfion {

/// JSON views of the report types, field for field. Key order is fixed
/// (lexicographic), so serialized output is reproducible byte for byte.

nlohmann::json to_json(const SolitonConfig& cfg);
nlohmann::json to_json(const EnergyReport& report);
nlohmann::json to_json(const HopfReport& report);
nlohmann::json to_json(const FirstIntegralReport& report);
nlohmann::json to_json(const ResidualReport& report);
nlohmann::json to_json(const BoundaryCheckResult& result);

}  // namespace hopfion
