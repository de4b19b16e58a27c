#pragma once

#include "json.hpp"
#include <string>

#include "twodist/representations.hpp"
#include "twodist/sweep.hpp"
#include "twodist/tolerances.hpp"

namespace twodist {

inline constexpr const char* kToolVersion = "1.0.0";

// Fixed-key JSON for a report; absent values are null.
nlohmann::json to_json(const ReprReport& r);
ReprReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Tolerances& tol);
Tolerances tolerances_from_json(const nlohmann::json& j);

// Report plus tool version, tolerances and the input graph in graph6.
nlohmann::json report_document(const ReprReport& r, const Tolerances& tol, const std::string& graph6);

nlohmann::json to_json(const SweepSummary& s);

}  // namespace twodist
