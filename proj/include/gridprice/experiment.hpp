#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridprice/generator.hpp"
#include "gridprice/model.hpp"

namespace gridprice {

enum class SupplyModel { flat, matched };

struct ExperimentConfig {
  Objective objective = Objective::peak_min;
  std::vector<std::string> algorithms;  // greedy | uniform | window | dijkstra | oracle
  std::vector<int> horizons;
  int max_deadline = 3;
  std::vector<int> windows;             // evaluated only for "window"
  std::vector<double> alphas;           // per class; size max_deadline
  DemandModel demand = DemandModel::homogeneous(1.0);
  SupplyModel supply = SupplyModel::flat;
  int trials = 30;
  std::uint64_t seed = 1;
  bool online = false;
  int history = 10;
  std::uint64_t budget = 10'000'000;
  bool timing = false;
};

struct ReportRow {
  std::string algorithm;
  int horizon = 0;
  int max_deadline = 0;
  int window = 0;  // 0 for algorithms without a window
  std::optional<double> mean_ratio;
  double mean_runtime_ms = 0.0;
  int trials = 0;
};

struct ScheduleRecord {
  std::string algorithm;
  int horizon = 0;
  int window = 0;
  int trial = 0;
  std::uint64_t scenario_seed = 0;
  std::vector<int> schedule;
  double objective_value = 0.0;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<ScheduleRecord> schedules;
};

/// Per (algorithm, K, W): runs `trials` seeded scenarios, solves, and
/// averages ratio-to-optimum and runtime. The optimum comes from the layered
/// graph when it fits the budget, else brute force, else the ratio column is
/// absent. Trial scenarios depend only on (seed, K, trial), never on the
/// algorithm list or run order. Runtimes are averaged as measured but the
/// emitters zero them unless timing was requested, keeping reports
/// byte-identical across reruns.
ExperimentReport run_experiment(const ExperimentConfig& config);

ExperimentConfig parse_experiment_config(const std::string& json_text);

/// CSV with header algorithm,K,N,W,mean_ratio,mean_runtime_ms,trials; the
/// ratio column shows "na" when no optimum fit the budget.
std::string report_csv(const std::vector<ReportRow>& rows, bool timing);
/// JSON mirror with identical field names (null for an absent ratio).
std::string report_json(const std::vector<ReportRow>& rows, bool timing);
std::string schedules_json(const std::vector<ScheduleRecord>& records);

/// Scenario seed for one trial: a SplitMix64 mix of (seed, K, trial), so any
/// row can be reproduced in isolation.
std::uint64_t trial_seed(std::uint64_t seed, int horizon, int trial);

}  // namespace gridprice
