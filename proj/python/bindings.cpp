#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace gridprice;

PYBIND11_MODULE(_gridprice, m) {
  m.doc() = "dynamic-pricing toolkit for threshold-policy smart grid consumers";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::enum_<Objective>(m, "Objective")
      .value("peak_min", Objective::peak_min)
      .value("match_supply", Objective::match_supply);

  py::enum_<OnlineAlgorithm>(m, "OnlineAlgorithm")
      .value("greedy", OnlineAlgorithm::greedy)
      .value("uniform", OnlineAlgorithm::uniform)
      .value("sliding_window", OnlineAlgorithm::sliding_window);

  py::class_<Job>(m, "Job")
      .def(py::init<>())
      .def(py::init([](std::int64_t id, int arrival, int deadline_class,
                       double demand) {
             Job j;
             j.id = id;
             j.arrival = arrival;
             j.deadline_class = deadline_class;
             j.demand = demand;
             return j;
           }),
           py::arg("id"), py::arg("arrival"), py::arg("deadline_class"),
           py::arg("demand"))
      .def_readwrite("id", &Job::id)
      .def_readwrite("arrival", &Job::arrival)
      .def_readwrite("deadline_class", &Job::deadline_class)
      .def_readwrite("demand", &Job::demand)
      .def("deadline", &Job::deadline);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("horizon", &Scenario::horizon)
      .def_readwrite("max_deadline", &Scenario::max_deadline)
      .def_readwrite("thresholds", &Scenario::thresholds)
      .def_readwrite("jobs", &Scenario::jobs)
      .def_readwrite("supply", &Scenario::supply)
      .def("total_demand", &Scenario::total_demand);

  py::class_<PriceSchedule>(m, "PriceSchedule")
      .def(py::init<>())
      .def(py::init([](std::vector<int> indices) {
             PriceSchedule schedule;
             schedule.indices = std::move(indices);
             return schedule;
           }),
           py::arg("indices"))
      .def_static("constant", &PriceSchedule::constant, py::arg("index"),
                  py::arg("horizon"))
      .def_readwrite("indices", &PriceSchedule::indices)
      .def("horizon", &PriceSchedule::horizon);

  py::class_<ConsumptionProfile>(m, "ConsumptionProfile")
      .def_readonly("u", &ConsumptionProfile::u)
      .def_readonly("consumed_at", &ConsumptionProfile::consumed_at);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("schedule", &SolveResult::schedule)
      .def_readonly("objective_value", &SolveResult::objective_value)
      .def_readonly("elapsed_ms", &SolveResult::elapsed_ms)
      .def_readonly("method", &SolveResult::method);

  py::class_<UniformResult>(m, "UniformResult")
      .def_readonly("result", &UniformResult::result)
      .def_readonly("chosen_index", &UniformResult::chosen_index);

  py::class_<GraphSize>(m, "GraphSize")
      .def_readonly("vertices", &GraphSize::vertices)
      .def_readonly("edges", &GraphSize::edges);

  py::class_<PeakBounds>(m, "PeakBounds")
      .def_readonly("lower", &PeakBounds::lower)
      .def_readonly("upper", &PeakBounds::upper)
      .def_readonly("max_arrivals", &PeakBounds::max_arrivals)
      .def_readonly("min_arrivals", &PeakBounds::min_arrivals);

  py::class_<RatioBound>(m, "RatioBound")
      .def_readonly("value", &RatioBound::value)
      .def_readonly("unbounded", &RatioBound::unbounded)
      .def_readonly("arg_class", &RatioBound::arg_class)
      .def_readonly("diagnostic", &RatioBound::diagnostic);

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("numerator"),
           py::arg("denominator"))
      .def(py::init<std::int64_t>(), py::arg("integer"))
      .def("num", &Rational::num)
      .def("den", &Rational::den)
      .def("to_double", &Rational::to_double)
      .def("__str__", &Rational::str)
      .def("__repr__",
           [](const Rational& r) { return "Rational(" + r.str() + ")"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self);

  py::class_<SubsetSumInstance>(m, "SubsetSumInstance")
      .def(py::init([](std::vector<std::int64_t> values, std::int64_t target) {
             return SubsetSumInstance{std::move(values), target};
           }),
           py::arg("values"), py::arg("target"))
      .def_readwrite("values", &SubsetSumInstance::values)
      .def_readwrite("target", &SubsetSumInstance::target);

  py::class_<ReducedConsumer>(m, "ReducedConsumer")
      .def_readonly("arrival", &ReducedConsumer::arrival)
      .def_readonly("departure", &ReducedConsumer::departure)
      .def_readonly("threshold_doubled", &ReducedConsumer::threshold_doubled)
      .def_readonly("demand_doubled", &ReducedConsumer::demand_doubled);

  py::class_<ReducedScenario>(m, "ReducedScenario")
      .def_readonly("periods", &ReducedScenario::periods)
      .def_readonly("consumers", &ReducedScenario::consumers)
      .def_readonly("supply_doubled", &ReducedScenario::supply_doubled);

  py::class_<VerifyResult>(m, "VerifyResult")
      .def_readonly("is_yes", &VerifyResult::is_yes)
      .def_readonly("best_omega", &VerifyResult::best_omega)
      .def_readonly("witness", &VerifyResult::witness);

  py::class_<DemandModel>(m, "DemandModel")
      .def_static("homogeneous", &DemandModel::homogeneous, py::arg("value"))
      .def_static("empirical", &DemandModel::empirical, py::arg("pool"));

  py::class_<CausalView>(m, "CausalView")
      .def(py::init<const Scenario&, int>(), py::arg("scenario"),
           py::arg("period"), py::keep_alive<1, 2>())
      .def("period", &CausalView::period)
      .def("horizon", &CausalView::horizon)
      .def("max_deadline", &CausalView::max_deadline)
      .def("visible_jobs", &CausalView::visible_jobs);

  py::class_<RateEstimate>(m, "RateEstimate")
      .def_readonly("alpha_hat", &RateEstimate::alpha_hat)
      .def_readonly("mean_demand", &RateEstimate::mean_demand);

  py::class_<SplitMix64>(m, "SplitMix64")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &SplitMix64::next)
      .def("next_unit", &SplitMix64::next_unit)
      .def("next_below", &SplitMix64::next_below, py::arg("bound"))
      .def("next_poisson", &SplitMix64::next_poisson, py::arg("alpha"))
      .def_static("mix", &SplitMix64::mix, py::arg("a"), py::arg("b"));

  m.def("validate", py::overload_cast<const Scenario&>(&validate),
        py::arg("scenario"));
  m.def("validate_instance",
        py::overload_cast<const SubsetSumInstance&>(&validate),
        py::arg("instance"));
  m.def("simulate", &simulate, py::arg("scenario"), py::arg("schedule"));
  m.def("consumption_at", &consumption_at, py::arg("scenario"),
        py::arg("window_indices"), py::arg("period"));
  m.def("peak", &peak, py::arg("profile"));
  m.def("mse", &mse, py::arg("profile"), py::arg("supply"));
  m.def("evaluate", &evaluate, py::arg("scenario"), py::arg("schedule"),
        py::arg("objective"));

  m.def("greedy", &greedy, py::arg("scenario"), py::arg("objective"));
  m.def("sliding_window", &sliding_window, py::arg("scenario"),
        py::arg("objective"), py::arg("window"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("uniform_best", &uniform_best, py::arg("scenario"),
        py::arg("objective"));
  m.def("brute_force", &brute_force, py::arg("scenario"), py::arg("objective"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("minimax_dijkstra", &minimax_dijkstra, py::arg("scenario"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("mse_dijkstra", &mse_dijkstra, py::arg("scenario"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("graph_size", &graph_size, py::arg("max_deadline"), py::arg("horizon"));

  m.def("lemma_bounds", &lemma_bounds, py::arg("scenario"));
  m.def("expected_max_poisson", &expected_max_poisson, py::arg("alpha"),
        py::arg("draws"), py::arg("eps") = 1e-12);
  m.def("expected_min_poisson", &expected_min_poisson, py::arg("alpha"),
        py::arg("draws"), py::arg("eps") = 1e-12);
  m.def("ratio_bound", &ratio_bound, py::arg("alphas"), py::arg("draws"),
        py::arg("eps") = 1e-12);

  m.def("reduce", &reduce, py::arg("instance"));
  m.def("alpha_threshold", &alpha_threshold, py::arg("instance"));
  m.def("verify", &verify, py::arg("instance"),
        py::arg("budget") = std::uint64_t{1} << 20);
  m.def("price_enumeration_optimum", &price_enumeration_optimum,
        py::arg("reduced"), py::arg("budget") = std::uint64_t{1} << 20);

  m.def("generate_scenario", &generate_scenario, py::arg("horizon"),
        py::arg("max_deadline"), py::arg("alphas"), py::arg("demand"),
        py::arg("seed"));
  m.def("canonical_ladder", &canonical_ladder, py::arg("max_deadline"));
  m.def("ingest_jobs_csv", &ingest_jobs_csv, py::arg("path"),
        py::arg("max_deadline"), py::arg("seed"),
        py::arg("horizon_override") = 0);
  m.def("flat_supply", &flat_supply, py::arg("scenario"));
  m.def("matched_supply", &matched_supply, py::arg("scenario"), py::arg("seed"));

  m.def("scenario_to_json", &scenario_to_json, py::arg("scenario"));
  m.def("scenario_from_json", &scenario_from_json, py::arg("text"));
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));

  m.def("estimate_rates", &estimate_rates, py::arg("view"), py::arg("history"));
  m.def("run_online", &run_online, py::arg("scenario"), py::arg("algorithm"),
        py::arg("objective"), py::arg("window") = 0, py::arg("history") = 10,
        py::arg("budget") = kDefaultEnumerationBudget);

  m.def(
      "run_experiment_json",
      [](const std::string& config_json, bool timing) {
        ExperimentConfig config = parse_experiment_config(config_json);
        config.timing = timing;
        const ExperimentReport report = run_experiment(config);
        return py::make_tuple(report_csv(report.rows, timing),
                              report_json(report.rows, timing),
                              schedules_json(report.schedules));
      },
      py::arg("config_json"), py::arg("timing") = false,
      "Parse a config, run the grid, and return (csv, json, schedules_json).");
}
