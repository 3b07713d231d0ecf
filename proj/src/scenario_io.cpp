#include "gridprice/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gridprice {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  ordered_json doc;
  doc["K"] = s.horizon;
  doc["N"] = s.max_deadline;
  doc["thresholds"] = s.thresholds;
  ordered_json jobs = ordered_json::array();
  for (const Job& j : s.jobs) {
    ordered_json job;
    job["arrival"] = j.arrival;
    job["deadline"] = j.deadline_class;
    job["demand"] = j.demand;
    jobs.push_back(std::move(job));
  }
  doc["jobs"] = std::move(jobs);
  if (s.supply) doc["supply"] = *s.supply;
  return doc.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("scenario JSON parse error: ") + e.what());
  }
  try {
    Scenario s;
    s.horizon = doc.at("K").get<int>();
    s.max_deadline = doc.at("N").get<int>();
    s.thresholds = doc.at("thresholds").get<std::vector<double>>();
    std::int64_t next_id = 1;
    for (const auto& job : doc.at("jobs")) {
      Job j;
      j.id = next_id++;
      j.arrival = job.at("arrival").get<int>();
      j.deadline_class = job.at("deadline").get<int>();
      j.demand = job.at("demand").get<double>();
      s.jobs.push_back(j);
    }
    if (doc.contains("supply")) {
      s.supply = doc.at("supply").get<std::vector<double>>();
    }
    require_valid(s);
    return s;
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("scenario JSON shape error: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << scenario_to_json(s);
}

std::string profile_to_json(const ConsumptionProfile& profile) {
  ordered_json doc;
  doc["u"] = profile.u;
  double total = 0.0;
  for (double v : profile.u) total += v;
  doc["total"] = total;
  doc["peak"] = peak(profile);
  ordered_json consumed = ordered_json::array();
  for (const auto& [id, period] : profile.consumed_at) {
    ordered_json row;
    row["job"] = id;
    row["period"] = period;
    consumed.push_back(std::move(row));
  }
  doc["consumed_at"] = std::move(consumed);
  return doc.dump(2) + "\n";
}

std::string solve_result_to_json(const SolveResult& result, bool with_timing) {
  ordered_json doc;
  doc["method"] = result.method;
  doc["schedule"] = result.schedule.indices;
  doc["objective_value"] = result.objective_value;
  doc["elapsed_ms"] = with_timing ? result.elapsed_ms : 0.0;
  return doc.dump(2) + "\n";
}

}  // namespace gridprice
