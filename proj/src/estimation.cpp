#include "gridprice/estimation.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gridprice/window_search.hpp"

namespace gridprice {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

CausalView::CausalView(const Scenario& s, int period)
    : scenario_(&s), period_(period) {
  if (period < 1 || period > s.horizon) {
    std::ostringstream os;
    os << "period " << period << " outside [1, " << s.horizon << "]";
    throw ValidationError(os.str());
  }
}

std::vector<Job> CausalView::visible_jobs() const {
  std::vector<Job> out;
  for (const Job& j : scenario_->jobs) {
    if (j.arrival <= period_) out.push_back(j);
  }
  return out;
}

RateEstimate estimate_rates(const CausalView& view, int history) {
  if (history < 1) throw ValidationError("history must be at least 1");
  const int k = view.period();
  const int first = std::max(1, k - history + 1);
  const int span = k - first + 1;

  RateEstimate est;
  est.alpha_hat.assign(static_cast<std::size_t>(view.max_deadline()), 0.0);
  double demand_sum = 0.0;
  std::int64_t job_count = 0;
  for (const Job& j : view.visible_jobs()) {
    if (j.arrival < first) continue;
    est.alpha_hat[static_cast<std::size_t>(j.deadline_class - 1)] += 1.0;
    demand_sum += j.demand;
    ++job_count;
  }
  for (double& a : est.alpha_hat) a /= static_cast<double>(span);
  est.mean_demand =
      job_count > 0 ? demand_sum / static_cast<double>(job_count) : 0.0;
  return est;
}

namespace {

SolveResult online_sliding_window(const Scenario& s, Objective objective,
                                  int window, int history,
                                  std::uint64_t budget,
                                  Clock::time_point start) {
  if (window < 1 || window > s.horizon) {
    std::ostringstream os;
    os << "window " << window << " outside [1, " << s.horizon << "]";
    throw ValidationError(os.str());
  }

  ArrivalIndex arrivals(s);
  PriceSchedule schedule;
  schedule.indices.reserve(static_cast<std::size_t>(s.horizon));
  DemandBuckets carried(s.max_deadline);

  for (int k = 1; k <= s.horizon; ++k) {
    const RateEstimate est = estimate_rates(CausalView(s, k), history);
    const int length = std::min(window, s.horizon - k + 1);

    WindowSpec spec;
    spec.length = length;
    spec.max_index = s.max_deadline;
    spec.objective = objective;
    spec.carried = carried;
    spec.arrivals.resize(static_cast<std::size_t>(length));
    for (std::int32_t ji : arrivals.at(k)) {
      const Job& j = s.jobs[static_cast<std::size_t>(ji)];
      spec.arrivals[0].push_back(WindowArrival{j.deadline_class - 1, j.demand});
    }
    for (int o = 1; o < length; ++o) {
      const int future_period = k + o;
      for (int n = 1; n <= s.max_deadline; ++n) {
        const double load =
            est.alpha_hat[static_cast<std::size_t>(n - 1)] * est.mean_demand;
        if (load <= 0.0) continue;
        const int clamped = std::min(n, s.horizon - future_period + 1);
        spec.arrivals[static_cast<std::size_t>(o)].push_back(
            WindowArrival{clamped - 1, load});
      }
    }
    if (objective == Objective::match_supply) {
      for (int o = 0; o < length; ++o) {
        spec.supply.push_back((*s.supply)[static_cast<std::size_t>(k + o - 1)]);
      }
    }

    const WindowBest best = best_window_sequence(spec, budget);
    const int committed = best.indices[0];
    schedule.indices.push_back(committed);

    for (const WindowArrival& a : spec.arrivals[0]) {
      carried.add(a.slot, a.demand);
    }
    carried.consume(committed);
    carried.shift();
  }

  SolveResult result;
  result.schedule = std::move(schedule);
  result.objective_value = evaluate(s, result.schedule, objective);
  result.method = "online-window";
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace

SolveResult run_online(const Scenario& s, OnlineAlgorithm algorithm,
                       Objective objective, int window, int history,
                       std::uint64_t budget) {
  const auto start = Clock::now();
  require_valid(s);
  if (objective == Objective::match_supply && !s.supply) {
    throw ValidationError("match_supply objective requires supply");
  }

  switch (algorithm) {
    case OnlineAlgorithm::greedy: {
      SolveResult result = greedy(s, objective);
      result.method = "online-greedy";
      return result;
    }
    case OnlineAlgorithm::uniform: {
      SolveResult result = uniform_best(s, objective).result;
      result.method = "online-uniform";
      return result;
    }
    case OnlineAlgorithm::sliding_window:
      return online_sliding_window(s, objective, window, history, budget,
                                   start);
  }
  throw ValidationError("unknown online algorithm");
}

}  // namespace gridprice
