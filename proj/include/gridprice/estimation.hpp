#pragma once

#include <cstdint>
#include <vector>

#include "gridprice/heuristics.hpp"
#include "gridprice/model.hpp"

namespace gridprice {

/// Read-only window onto a scenario at period k: only jobs that have already
/// arrived (arrival <= k) are reachable through it.
class CausalView {
 public:
  CausalView(const Scenario& s, int period);

  int period() const { return period_; }
  int horizon() const { return scenario_->horizon; }
  int max_deadline() const { return scenario_->max_deadline; }
  /// Jobs with arrival <= period, in scenario order.
  std::vector<Job> visible_jobs() const;

 private:
  const Scenario* scenario_;
  int period_;
};

struct RateEstimate {
  /// Expected arrivals per period for each deadline class (index n-1).
  std::vector<double> alpha_hat;
  double mean_demand = 0.0;
};

/// Trailing-window empirical means over periods [max(1, k-H+1), k]:
/// alpha_hat[n] averages the per-period class-n arrival counts, mean_demand
/// averages the demands of jobs arriving in the window (0 if none arrived).
RateEstimate estimate_rates(const CausalView& view, int history);

enum class OnlineAlgorithm { greedy, uniform, sliding_window };

/// Runs an algorithm that sees jobs only as they arrive. Greedy and uniform
/// ignore the future entirely (greedy prices each period off realized pending
/// demand; uniform fixes its constant index up front). The sliding-window
/// planner fills its look-ahead window with realized demand for the current
/// period plus synthetic fractional demand alpha_hat[n] * mean_demand per
/// class for each later period, re-plans every period, and commits only the
/// window's first price. The reported value is the realized objective of the
/// committed schedule.
SolveResult run_online(const Scenario& s, OnlineAlgorithm algorithm,
                       Objective objective, int window = 0, int history = 10,
                       std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace gridprice
