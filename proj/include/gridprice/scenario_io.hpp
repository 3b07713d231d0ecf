#pragma once

#include <string>

#include "gridprice/heuristics.hpp"
#include "gridprice/model.hpp"

namespace gridprice {

/// Scenario wire format (field names are part of the contract):
/// {"K": int, "N": int, "thresholds": [..], "jobs": [{"arrival": int,
/// "deadline": int, "demand": num}, ..], "supply": [..]} where "deadline" is
/// the deadline class (periods from arrival) and "supply" is optional. Job
/// ids are positional (1-based load order) and never serialized.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

std::string profile_to_json(const ConsumptionProfile& profile);
std::string solve_result_to_json(const SolveResult& result, bool with_timing);

}  // namespace gridprice
