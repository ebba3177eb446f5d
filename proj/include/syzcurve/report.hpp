#pragma once

#include <string>

#include <json.hpp>

#include "syzcurve/analysis.hpp"
#include "syzcurve/arrangements.hpp"

namespace syzcurve {

inline constexpr int kJsonSchemaVersion = 1;

/// JSON schema 1. Key order is fixed, so output is byte-stable.
nlohmann::ordered_json to_json(const CurveReport& report);
std::string to_text(const CurveReport& report);

nlohmann::ordered_json to_json(const GradedTable& table);
nlohmann::ordered_json to_json(const std::vector<IntervalRow>& rows, int d);
nlohmann::ordered_json to_json(const TeraoResult& t, int d, long long tau);

}  // namespace syzcurve
