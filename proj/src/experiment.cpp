#include "gridprice/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "gridprice/estimation.hpp"
#include "gridprice/heuristics.hpp"
#include "gridprice/price_graph.hpp"
#include "gridprice/rng.hpp"

namespace gridprice {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kAlgorithms[] = {"greedy", "uniform", "window", "dijkstra",
                             "oracle"};

bool known_algorithm(const std::string& name) {
  for (const char* a : kAlgorithms) {
    if (name == a) return true;
  }
  return false;
}

void require_config(const ExperimentConfig& config) {
  if (config.algorithms.empty()) {
    throw ValidationError("no algorithms configured");
  }
  for (const std::string& a : config.algorithms) {
    if (!known_algorithm(a)) {
      throw ValidationError("unknown algorithm: " + a);
    }
    if (config.online && (a == "dijkstra" || a == "oracle")) {
      throw ValidationError(a + " has no online mode");
    }
  }
  if (config.horizons.empty()) throw ValidationError("no horizons configured");
  for (int k : config.horizons) {
    if (k < 1) throw ValidationError("horizons must be at least 1");
  }
  if (config.max_deadline < 1) {
    throw ValidationError("max deadline must be at least 1");
  }
  if (static_cast<int>(config.alphas.size()) != config.max_deadline) {
    throw ValidationError("one arrival rate per deadline class is required");
  }
  const bool wants_window =
      std::find(config.algorithms.begin(), config.algorithms.end(), "window") !=
      config.algorithms.end();
  if (wants_window && config.windows.empty()) {
    throw ValidationError("window algorithm configured without window sizes");
  }
  for (int w : config.windows) {
    if (w < 1) throw ValidationError("window sizes must be at least 1");
    for (int k : config.horizons) {
      if (w > k) {
        std::ostringstream os;
        os << "window " << w << " exceeds horizon " << k;
        throw ValidationError(os.str());
      }
    }
  }
  if (config.trials < 1) throw ValidationError("trials must be at least 1");
  if (config.history < 1) throw ValidationError("history must be at least 1");
}

std::optional<SolveResult> optimum_for(const Scenario& s, Objective objective,
                                       std::uint64_t budget) {
  try {
    return objective == Objective::peak_min ? minimax_dijkstra(s, budget)
                                            : mse_dijkstra(s, budget);
  } catch (const BudgetError&) {
  }
  try {
    return brute_force(s, objective, budget);
  } catch (const BudgetError&) {
  }
  return std::nullopt;
}

SolveResult solve_one(const ExperimentConfig& config, const std::string& algo,
                      const Scenario& s, int window) {
  if (config.online) {
    if (algo == "greedy") {
      return run_online(s, OnlineAlgorithm::greedy, config.objective, 0,
                        config.history, config.budget);
    }
    if (algo == "uniform") {
      return run_online(s, OnlineAlgorithm::uniform, config.objective, 0,
                        config.history, config.budget);
    }
    return run_online(s, OnlineAlgorithm::sliding_window, config.objective,
                      window, config.history, config.budget);
  }
  if (algo == "greedy") return greedy(s, config.objective);
  if (algo == "uniform") return uniform_best(s, config.objective).result;
  if (algo == "window") {
    return sliding_window(s, config.objective, window, config.budget);
  }
  if (algo == "dijkstra") {
    return config.objective == Objective::peak_min
               ? minimax_dijkstra(s, config.budget)
               : mse_dijkstra(s, config.budget);
  }
  return brute_force(s, config.objective, config.budget);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int horizon, int trial) {
  return SplitMix64::mix(SplitMix64::mix(seed, static_cast<std::uint64_t>(horizon)),
                         static_cast<std::uint64_t>(trial));
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  require_config(config);
  ExperimentReport report;

  for (const std::string& algo : config.algorithms) {
    const std::vector<int> windows =
        algo == "window" ? config.windows : std::vector<int>{0};
    for (int horizon : config.horizons) {
      for (int window : windows) {
        ReportRow row;
        row.algorithm = algo;
        row.horizon = horizon;
        row.max_deadline = config.max_deadline;
        row.window = window;
        row.trials = config.trials;

        double ratio_sum = 0.0;
        bool ratio_ok = true;
        double runtime_sum = 0.0;
        for (int trial = 0; trial < config.trials; ++trial) {
          const std::uint64_t scenario_seed =
              trial_seed(config.seed, horizon, trial);
          Scenario s = generate_scenario(horizon, config.max_deadline,
                                         config.alphas, config.demand,
                                         scenario_seed);
          if (config.objective == Objective::match_supply) {
            s.supply = config.supply == SupplyModel::flat
                           ? flat_supply(s)
                           : matched_supply(
                                 s, SplitMix64::mix(scenario_seed, 2));
          }

          const SolveResult solved = solve_one(config, algo, s, window);
          runtime_sum += solved.elapsed_ms;
          report.schedules.push_back(
              ScheduleRecord{algo, horizon, window, trial, scenario_seed,
                             solved.schedule.indices, solved.objective_value});

          if (!ratio_ok) continue;
          const auto optimum = optimum_for(s, config.objective, config.budget);
          if (!optimum) {
            ratio_ok = false;
            continue;
          }
          if (optimum->objective_value > 0.0) {
            ratio_sum += solved.objective_value / optimum->objective_value;
          } else if (solved.objective_value == 0.0) {
            ratio_sum += 1.0;
          } else {
            ratio_ok = false;
          }
        }

        if (ratio_ok) row.mean_ratio = ratio_sum / config.trials;
        row.mean_runtime_ms = runtime_sum / config.trials;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  try {
    ExperimentConfig config;
    const std::string objective = doc.value("objective", "peak");
    if (objective == "peak") {
      config.objective = Objective::peak_min;
    } else if (objective == "mse") {
      config.objective = Objective::match_supply;
    } else {
      throw ValidationError("objective must be \"peak\" or \"mse\"");
    }
    config.algorithms = doc.at("algorithms").get<std::vector<std::string>>();
    if (doc.at("K").is_array()) {
      config.horizons = doc.at("K").get<std::vector<int>>();
    } else {
      config.horizons = {doc.at("K").get<int>()};
    }
    config.max_deadline = doc.at("N").get<int>();
    if (doc.contains("windows")) {
      config.windows = doc.at("windows").get<std::vector<int>>();
    }
    if (doc.contains("alphas")) {
      if (doc.at("alphas").is_array()) {
        config.alphas = doc.at("alphas").get<std::vector<double>>();
      } else {
        config.alphas.assign(static_cast<std::size_t>(config.max_deadline),
                             doc.at("alphas").get<double>());
      }
    } else {
      config.alphas.assign(static_cast<std::size_t>(config.max_deadline), 1.0);
    }
    if (doc.contains("demand")) {
      const auto& demand = doc.at("demand");
      const std::string kind = demand.value("kind", "homogeneous");
      if (kind == "homogeneous") {
        config.demand = DemandModel::homogeneous(demand.value("value", 1.0));
      } else if (kind == "empirical") {
        config.demand = DemandModel::empirical(
            demand.at("pool").get<std::vector<double>>());
      } else {
        throw ValidationError("demand kind must be homogeneous or empirical");
      }
    }
    const std::string supply = doc.value("supply", "flat");
    if (supply == "flat") {
      config.supply = SupplyModel::flat;
    } else if (supply == "matched") {
      config.supply = SupplyModel::matched;
    } else {
      throw ValidationError("supply must be \"flat\" or \"matched\"");
    }
    config.trials = doc.value("trials", 30);
    config.seed = doc.value("seed", static_cast<std::uint64_t>(1));
    config.online = doc.value("online", false);
    config.history = doc.value("history", 10);
    if (doc.contains("budget")) {
      config.budget = doc.at("budget").get<std::uint64_t>();
    }
    return config;
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("config shape error: ") + e.what());
  }
}

namespace {

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

std::string report_csv(const std::vector<ReportRow>& rows, bool timing) {
  std::ostringstream os;
  os << "algorithm,K,N,W,mean_ratio,mean_runtime_ms,trials\n";
  for (const ReportRow& row : rows) {
    os << row.algorithm << "," << row.horizon << "," << row.max_deadline << ","
       << row.window << ",";
    os << (row.mean_ratio ? format_fixed(*row.mean_ratio, 6) : "na");
    os << "," << format_fixed(timing ? row.mean_runtime_ms : 0.0, 3) << ","
       << row.trials << "\n";
  }
  return os.str();
}

std::string report_json(const std::vector<ReportRow>& rows, bool timing) {
  ordered_json doc = ordered_json::array();
  for (const ReportRow& row : rows) {
    ordered_json r;
    r["algorithm"] = row.algorithm;
    r["K"] = row.horizon;
    r["N"] = row.max_deadline;
    r["W"] = row.window;
    if (row.mean_ratio) {
      r["mean_ratio"] = *row.mean_ratio;
    } else {
      r["mean_ratio"] = nullptr;
    }
    r["mean_runtime_ms"] = timing ? row.mean_runtime_ms : 0.0;
    r["trials"] = row.trials;
    doc.push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string schedules_json(const std::vector<ScheduleRecord>& records) {
  ordered_json doc = ordered_json::array();
  for (const ScheduleRecord& record : records) {
    ordered_json r;
    r["algorithm"] = record.algorithm;
    r["K"] = record.horizon;
    r["W"] = record.window;
    r["trial"] = record.trial;
    r["seed"] = record.scenario_seed;
    r["schedule"] = record.schedule;
    r["objective_value"] = record.objective_value;
    doc.push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

}  // namespace gridprice
