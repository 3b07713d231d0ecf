#include "gridprice/heuristics.hpp"

#include <chrono>
#include <sstream>

#include "gridprice/window_search.hpp"

namespace gridprice {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_objective_inputs(const Scenario& s, Objective objective) {
  require_valid(s);
  if (objective == Objective::match_supply && !s.supply) {
    throw ValidationError("match_supply objective requires supply");
  }
}

std::vector<WindowArrival> bucketized_arrivals(const Scenario& s,
                                               const ArrivalIndex& index,
                                               int period) {
  std::vector<WindowArrival> out;
  for (std::int32_t ji : index.at(period)) {
    const Job& j = s.jobs[static_cast<std::size_t>(ji)];
    out.push_back(WindowArrival{j.deadline() - period, j.demand});
  }
  return out;
}

}  // namespace

SolveResult greedy(const Scenario& s, Objective objective) {
  const auto start = Clock::now();
  require_objective_inputs(s, objective);

  ArrivalIndex arrivals(s);
  LoadState state(s, arrivals);
  PriceSchedule schedule;
  schedule.indices.reserve(static_cast<std::size_t>(s.horizon));
  for (int k = 1; k <= s.horizon; ++k) {
    int best_t = 1;
    double best_value = 0.0;
    for (int t = 1; t <= s.max_deadline; ++t) {
      const double u = state.peek(t);
      double value;
      if (objective == Objective::peak_min) {
        value = u;
      } else {
        const double gap = u - (*s.supply)[static_cast<std::size_t>(k - 1)];
        value = gap * gap;
      }
      if (t == 1 || value < best_value) {
        best_value = value;
        best_t = t;
      }
    }
    schedule.indices.push_back(best_t);
    state.commit(best_t);
  }

  SolveResult result;
  result.schedule = std::move(schedule);
  result.objective_value = evaluate(s, result.schedule, objective);
  result.method = "greedy";
  result.elapsed_ms = ms_since(start);
  return result;
}

SolveResult sliding_window(const Scenario& s, Objective objective, int window,
                           std::uint64_t budget) {
  const auto start = Clock::now();
  require_objective_inputs(s, objective);
  if (window < 1 || window > s.horizon) {
    std::ostringstream os;
    os << "window " << window << " outside [1, " << s.horizon << "]";
    throw ValidationError(os.str());
  }

  ArrivalIndex arrivals(s);
  PriceSchedule schedule;
  schedule.indices.assign(static_cast<std::size_t>(s.horizon), 1);

  DemandBuckets carried(s.max_deadline);
  for (int first = 1; first + window - 1 <= s.horizon; ++first) {
    WindowSpec spec;
    spec.length = window;
    spec.max_index = s.max_deadline;
    spec.objective = objective;
    spec.carried = carried;
    spec.arrivals.reserve(static_cast<std::size_t>(window));
    for (int o = 0; o < window; ++o) {
      spec.arrivals.push_back(bucketized_arrivals(s, arrivals, first + o));
      if (objective == Objective::match_supply) {
        spec.supply.push_back(
            (*s.supply)[static_cast<std::size_t>(first + o - 1)]);
      }
    }
    WindowBest best = best_window_sequence(spec, budget);
    for (int o = 0; o < window; ++o) {
      schedule.indices[static_cast<std::size_t>(first + o - 1)] =
          best.indices[static_cast<std::size_t>(o)];
    }
    for (const WindowArrival& a : spec.arrivals[0]) {
      carried.add(a.slot, a.demand);
    }
    carried.consume(best.indices[0]);
    carried.shift();
  }

  SolveResult result;
  result.schedule = std::move(schedule);
  result.objective_value = evaluate(s, result.schedule, objective);
  result.method = "window";
  result.elapsed_ms = ms_since(start);
  return result;
}

UniformResult uniform_best(const Scenario& s, Objective objective) {
  const auto start = Clock::now();
  require_objective_inputs(s, objective);

  int best_t = 1;
  double best_value = 0.0;
  for (int t = 1; t <= s.max_deadline; ++t) {
    const double value =
        evaluate(s, PriceSchedule::constant(t, s.horizon), objective);
    if (t == 1 || value < best_value) {
      best_value = value;
      best_t = t;
    }
  }

  UniformResult out;
  out.chosen_index = best_t;
  out.result.schedule = PriceSchedule::constant(best_t, s.horizon);
  out.result.objective_value = best_value;
  out.result.method = "uniform";
  out.result.elapsed_ms = ms_since(start);
  return out;
}

SolveResult brute_force(const Scenario& s, Objective objective,
                        std::uint64_t budget) {
  const auto start = Clock::now();
  require_objective_inputs(s, objective);

  ArrivalIndex arrivals(s);
  WindowSpec spec;
  spec.length = s.horizon;
  spec.max_index = s.max_deadline;
  spec.objective = objective;
  spec.carried = DemandBuckets(s.max_deadline);
  for (int k = 1; k <= s.horizon; ++k) {
    spec.arrivals.push_back(bucketized_arrivals(s, arrivals, k));
    if (objective == Objective::match_supply) {
      spec.supply.push_back((*s.supply)[static_cast<std::size_t>(k - 1)]);
    }
  }
  WindowBest best = best_window_sequence(spec, budget);

  SolveResult result;
  result.schedule.indices = best.indices;
  result.objective_value = evaluate(s, result.schedule, objective);
  result.method = "brute_force";
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace gridprice
