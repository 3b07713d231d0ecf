#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridprice/analysis.hpp"
#include "gridprice/errors.hpp"
#include "gridprice/estimation.hpp"
#include "gridprice/experiment.hpp"
#include "gridprice/generator.hpp"
#include "gridprice/hardness.hpp"
#include "gridprice/heuristics.hpp"
#include "gridprice/model.hpp"
#include "gridprice/price_graph.hpp"
#include "gridprice/rng.hpp"
#include "gridprice/scenario_io.hpp"

namespace {

using gridprice::BudgetError;
using gridprice::Objective;
using gridprice::Scenario;
using gridprice::SolveResult;
using gridprice::ValidationError;
using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultBudget = gridprice::kDefaultEnumerationBudget;

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GRIDPRICE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("GRIDPRICE_BUDGET is not a number");
    }
  }
  return kDefaultBudget;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

Objective parse_objective(const std::string& name) {
  if (name == "peak") return Objective::peak_min;
  if (name == "mse") return Objective::match_supply;
  throw ValidationError("objective must be \"peak\" or \"mse\"");
}

int run(int argc, char** argv) {
  CLI::App app{"dynamic-pricing toolkit for threshold-policy smart grid consumers"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded scenario");
  int gen_horizon = 24;
  int gen_classes = 3;
  std::string gen_alphas = "1";
  double gen_demand = 1.0;
  std::string gen_pool;
  std::uint64_t gen_seed = 1;
  std::string gen_supply = "none";
  std::string gen_out;
  gen->add_option("--K,--horizon", gen_horizon, "number of periods");
  gen->add_option("--N,--classes", gen_classes, "number of deadline classes");
  gen->add_option("--alphas", gen_alphas,
                  "per-class Poisson rates, comma separated (single value broadcasts)");
  gen->add_option("--demand", gen_demand, "homogeneous demand per job");
  gen->add_option("--demand-pool", gen_pool,
                  "empirical demand pool, comma separated (overrides --demand)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--supply", gen_supply,
                  "attach a supply vector: none, flat, or matched");
  gen->add_option("--out,-o", gen_out, "output path (default stdout)");

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "run a schedule on a scenario");
  std::string sim_scenario;
  std::string sim_schedule;
  int sim_uniform = 0;
  simulate_cmd->add_option("--scenario", sim_scenario, "scenario JSON path")
      ->required();
  simulate_cmd->add_option("--schedule", sim_schedule,
                           "price indices, comma separated");
  simulate_cmd->add_option("--uniform", sim_uniform,
                           "constant price index for all periods");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "compute a price schedule");
  std::string opt_scenario;
  std::string opt_algo;
  std::string opt_objective = "peak";
  int opt_window = 0;
  int opt_history = 10;
  bool opt_online = false;
  bool opt_timing = false;
  std::optional<std::uint64_t> opt_budget;
  optimize->add_option("--scenario", opt_scenario, "scenario JSON path")
      ->required();
  optimize
      ->add_option("--algo", opt_algo,
                   "greedy | window | uniform | dijkstra | oracle")
      ->required();
  optimize->add_option("--objective", opt_objective, "peak | mse");
  optimize->add_option("--window,-W", opt_window, "window size for --algo window");
  optimize->add_flag("--online", opt_online,
                     "causal mode: jobs are visible only from arrival");
  optimize->add_option("--history,-H", opt_history,
                       "estimation window for --online");
  optimize->add_flag("--timing", opt_timing, "report wall-clock time");
  optimize->add_option("--budget", opt_budget, "enumeration/graph work budget");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a seeded experiment grid");
  std::string exp_config;
  std::string exp_out;
  std::string exp_json;
  std::string exp_schedules;
  bool exp_timing = false;
  std::optional<std::uint64_t> exp_budget;
  experiment->add_option("--config", exp_config, "experiment config JSON path")
      ->required();
  experiment->add_option("--out,-o", exp_out, "CSV report path (default stdout)");
  experiment->add_option("--json", exp_json, "also write a JSON report here");
  experiment->add_option("--emit-schedules", exp_schedules,
                         "dump every solved schedule to this JSON path");
  experiment->add_flag("--timing", exp_timing,
                       "report measured runtimes (breaks byte-identical reruns)");
  experiment->add_option("--budget", exp_budget, "enumeration/graph work budget");

  // analyze-ratio
  auto* analyze = app.add_subcommand(
      "analyze-ratio", "Poisson extreme-value expectations and their ratio");
  std::string ar_alphas = "1,2,3,4,5,6,7,8,9,10";
  int ar_draws = 100;
  double ar_eps = 1e-12;
  std::string ar_out;
  analyze->add_option("--alphas", ar_alphas, "comma separated Poisson rates");
  analyze->add_option("--K,--draws", ar_draws, "draws per period (K)");
  analyze->add_option("--eps", ar_eps, "series truncation tolerance");
  analyze->add_option("--out,-o", ar_out, "CSV output path (default stdout)");

  // reduce
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Subset-Sum to supply-matching reduction and verdict");
  std::string red_instance;
  std::string red_values;
  std::int64_t red_target = 0;
  std::optional<std::uint64_t> red_budget;
  reduce_cmd->add_option("--instance", red_instance,
                         "instance JSON path: {\"a\":[..],\"B\":..}");
  reduce_cmd->add_option("--a", red_values,
                         "values, comma separated, sorted nonincreasing");
  reduce_cmd->add_option("--B", red_target, "target sum");
  reduce_cmd->add_option("--budget", red_budget, "subset enumeration budget");

  // graph-size
  auto* graph_cmd = app.add_subcommand("graph-size", "layered price graph size");
  int gs_classes = 3;
  int gs_horizon = 24;
  graph_cmd->add_option("--N,--classes", gs_classes, "number of deadline classes");
  graph_cmd->add_option("--K,--horizon", gs_horizon, "number of periods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    std::vector<double> alphas = parse_double_list(gen_alphas);
    if (alphas.size() == 1) {
      alphas.assign(static_cast<std::size_t>(gen_classes), alphas.front());
    }
    gridprice::DemandModel demand =
        gen_pool.empty()
            ? gridprice::DemandModel::homogeneous(gen_demand)
            : gridprice::DemandModel::empirical(parse_double_list(gen_pool));
    Scenario s = gridprice::generate_scenario(gen_horizon, gen_classes, alphas,
                                              demand, gen_seed);
    if (gen_supply == "flat") {
      s.supply = gridprice::flat_supply(s);
    } else if (gen_supply == "matched") {
      s.supply = gridprice::matched_supply(
          s, gridprice::SplitMix64::mix(gen_seed, 2));
    } else if (gen_supply != "none") {
      throw ValidationError("--supply must be none, flat, or matched");
    }
    write_output(gridprice::scenario_to_json(s), gen_out);
    return 0;
  }

  if (simulate_cmd->parsed()) {
    const Scenario s = gridprice::load_scenario(sim_scenario);
    gridprice::PriceSchedule schedule;
    if (!sim_schedule.empty()) {
      schedule.indices = parse_int_list(sim_schedule);
    } else if (sim_uniform >= 1) {
      schedule = gridprice::PriceSchedule::constant(sim_uniform, s.horizon);
    } else {
      throw ValidationError("provide --schedule or --uniform");
    }
    const auto profile = gridprice::simulate(s, schedule);
    ordered_json doc = ordered_json::parse(gridprice::profile_to_json(profile));
    if (s.supply) doc["mse"] = gridprice::mse(profile, *s.supply);
    write_output(doc.dump(2) + "\n", "");
    return 0;
  }

  if (optimize->parsed()) {
    const Scenario s = gridprice::load_scenario(opt_scenario);
    const Objective objective = parse_objective(opt_objective);
    const std::uint64_t budget = resolve_budget(opt_budget);
    SolveResult result;
    if (opt_online) {
      gridprice::OnlineAlgorithm algorithm;
      if (opt_algo == "greedy") {
        algorithm = gridprice::OnlineAlgorithm::greedy;
      } else if (opt_algo == "uniform") {
        algorithm = gridprice::OnlineAlgorithm::uniform;
      } else if (opt_algo == "window") {
        algorithm = gridprice::OnlineAlgorithm::sliding_window;
      } else {
        throw ValidationError(opt_algo + " has no online mode");
      }
      result = gridprice::run_online(s, algorithm, objective, opt_window,
                                     opt_history, budget);
    } else if (opt_algo == "greedy") {
      result = gridprice::greedy(s, objective);
    } else if (opt_algo == "uniform") {
      result = gridprice::uniform_best(s, objective).result;
    } else if (opt_algo == "window") {
      result = gridprice::sliding_window(s, objective, opt_window, budget);
    } else if (opt_algo == "dijkstra") {
      result = objective == Objective::peak_min
                   ? gridprice::minimax_dijkstra(s, budget)
                   : gridprice::mse_dijkstra(s, budget);
    } else if (opt_algo == "oracle") {
      result = gridprice::brute_force(s, objective, budget);
    } else {
      throw ValidationError("unknown algorithm: " + opt_algo);
    }
    write_output(gridprice::solve_result_to_json(result, opt_timing), "");
    return 0;
  }

  if (experiment->parsed()) {
    gridprice::ExperimentConfig config =
        gridprice::parse_experiment_config(read_file(exp_config));
    if (exp_budget) {
      config.budget = *exp_budget;
    } else if (std::getenv("GRIDPRICE_BUDGET") != nullptr) {
      config.budget = resolve_budget(std::nullopt);
    }
    config.timing = exp_timing;
    const gridprice::ExperimentReport report = gridprice::run_experiment(config);
    write_output(gridprice::report_csv(report.rows, exp_timing), exp_out);
    if (!exp_json.empty()) {
      write_output(gridprice::report_json(report.rows, exp_timing), exp_json);
    }
    if (!exp_schedules.empty()) {
      write_output(gridprice::schedules_json(report.schedules), exp_schedules);
    }
    return 0;
  }

  if (analyze->parsed()) {
    const std::vector<double> alphas = parse_double_list(ar_alphas);
    std::ostringstream os;
    os << "alpha,E_max,E_min,ratio\n";
    for (double alpha : alphas) {
      const double emax = gridprice::expected_max_poisson(alpha, ar_draws, ar_eps);
      const double emin = gridprice::expected_min_poisson(alpha, ar_draws, ar_eps);
      const auto bound = gridprice::ratio_bound({alpha}, ar_draws, ar_eps);
      os << alpha << "," << emax << "," << emin << ",";
      if (bound.unbounded) {
        os << "inf";
      } else {
        os << bound.value;
      }
      os << "\n";
    }
    write_output(os.str(), ar_out);
    return 0;
  }

  if (reduce_cmd->parsed()) {
    gridprice::SubsetSumInstance instance;
    if (!red_instance.empty()) {
      ordered_json doc;
      try {
        doc = ordered_json::parse(read_file(red_instance));
      } catch (const ordered_json::parse_error& e) {
        throw ValidationError(std::string("instance parse error: ") + e.what());
      }
      try {
        instance.values = doc.at("a").get<std::vector<std::int64_t>>();
        instance.target = doc.at("B").get<std::int64_t>();
      } catch (const ordered_json::exception& e) {
        throw ValidationError(std::string("instance shape error: ") + e.what());
      }
    } else if (!red_values.empty()) {
      for (int v : parse_int_list(red_values)) instance.values.push_back(v);
      instance.target = red_target;
    } else {
      throw ValidationError("provide --instance or --a/--B");
    }

    const std::uint64_t budget = red_budget ? *red_budget : 1ull << 20;
    const auto reduced = gridprice::reduce(instance);
    const auto alpha = gridprice::alpha_threshold(instance);
    const auto verdict = gridprice::verify(instance, budget);

    ordered_json doc;
    doc["instance"]["a"] = instance.values;
    doc["instance"]["B"] = instance.target;
    ordered_json consumers = ordered_json::array();
    for (const auto& c : reduced.consumers) {
      ordered_json row;
      row["arrival"] = c.arrival;
      row["departure"] = c.departure;
      row["threshold"] = static_cast<double>(c.threshold_doubled) / 2.0;
      row["demand"] = static_cast<double>(c.demand_doubled) / 2.0;
      consumers.push_back(std::move(row));
    }
    doc["reduced"]["periods"] = reduced.periods;
    doc["reduced"]["consumers"] = std::move(consumers);
    ordered_json supply = ordered_json::array();
    for (std::int64_t s2 : reduced.supply_doubled) {
      supply.push_back(static_cast<double>(s2) / 2.0);
    }
    doc["reduced"]["supply"] = std::move(supply);
    doc["alpha"]["num"] = alpha.num();
    doc["alpha"]["den"] = alpha.den();
    doc["alpha"]["text"] = alpha.str();
    doc["verify"]["is_yes"] = verdict.is_yes;
    doc["verify"]["best_omega"]["num"] = verdict.best_omega.num();
    doc["verify"]["best_omega"]["den"] = verdict.best_omega.den();
    doc["verify"]["best_omega"]["text"] = verdict.best_omega.str();
    if (verdict.witness) {
      doc["verify"]["witness"] = *verdict.witness;
    } else {
      doc["verify"]["witness"] = nullptr;
    }
    write_output(doc.dump(2) + "\n", "");
    return 0;
  }

  if (graph_cmd->parsed()) {
    const auto size = gridprice::graph_size(gs_classes, gs_horizon);
    ordered_json doc;
    doc["N"] = gs_classes;
    doc["K"] = gs_horizon;
    doc["vertices"] = size.vertices;
    doc["edges"] = size.edges;
    write_output(doc.dump(2) + "\n", "");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
