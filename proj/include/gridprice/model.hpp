#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridprice/errors.hpp"

namespace gridprice {

/// A deferrable load. It becomes active at `arrival` and must finish within
/// `deadline_class` periods, i.e. its absolute deadline is
/// arrival + deadline_class - 1.
struct Job {
  std::int64_t id = 0;
  int arrival = 1;
  int deadline_class = 1;
  double demand = 0.0;

  int deadline() const { return arrival + deadline_class - 1; }
};

/// Pricing problem instance: a horizon of K periods, a strictly decreasing
/// ladder of N price levels (thresholds[0] is the highest price, posted as
/// index 1), a set of jobs, and an optional per-period supply target.
struct Scenario {
  int horizon = 0;
  int max_deadline = 0;
  std::vector<double> thresholds;
  std::vector<Job> jobs;
  std::optional<std::vector<double>> supply;

  double total_demand() const;
};

/// One ladder index in [1, max_deadline] per period. A consumer whose
/// time-to-go is t buys exactly when the posted index is >= t, because the
/// ladder is strictly decreasing; keeping the index (not the float price)
/// makes that decision exact.
struct PriceSchedule {
  std::vector<int> indices;

  static PriceSchedule constant(int index, int horizon);
  int horizon() const { return static_cast<int>(indices.size()); }
};

/// Aggregate consumption per period plus, for each job, the period in which
/// it consumed.
struct ConsumptionProfile {
  std::vector<double> u;
  std::map<std::int64_t, int> consumed_at;
};

enum class Objective { peak_min, match_supply };

/// Structural checks; returns one message per violation (empty means valid).
std::vector<std::string> validate(const Scenario& s);

/// Throws ValidationError listing every violation.
void require_valid(const Scenario& s);

/// Throws ValidationError unless `schedule` has one index in [1, N] for each
/// of the scenario's K periods.
void require_valid_schedule(const Scenario& s, const PriceSchedule& schedule);

/// Runs the threshold-consumer dynamics over the whole horizon. Every job
/// consumes its full demand in the first period k >= arrival with
/// indices[k-1] >= arrival + deadline_class - k (time-to-go), which is
/// guaranteed to happen by its deadline.
ConsumptionProfile simulate(const Scenario& s, const PriceSchedule& schedule);

/// Aggregate consumption at `period` given only the trailing price window:
/// `window_indices` must cover exactly the periods
/// [max(1, period - N + 1), period]. Jobs arriving before that window cannot
/// still be pending at `period`, so this equals simulate()'s u(period) for any
/// full schedule extending the window.
double consumption_at(const Scenario& s, const std::vector<int>& window_indices,
                      int period);

double peak(const ConsumptionProfile& profile);

/// Mean squared gap between consumption and supply over the horizon.
double mse(const ConsumptionProfile& profile, const std::vector<double>& supply);

/// Evaluates `schedule` under the scenario's objective. match_supply requires
/// the scenario to carry a supply vector.
double evaluate(const Scenario& s, const PriceSchedule& schedule,
                Objective objective);

/// Pending flexible demand keyed by periods-until-deadline (slot 0 is due in
/// the current period). Posting index i drains slots 0..i-1; the deadline
/// guarantee is exactly that slot 0 is drained every period.
class DemandBuckets {
 public:
  DemandBuckets() = default;
  explicit DemandBuckets(int max_deadline);

  void add(int periods_until_deadline, double demand);
  /// Total pending demand that index `price_index` would release now.
  double peek(int price_index) const;
  /// Drains slots 0..price_index-1 and returns the released total.
  double consume(int price_index);
  /// Moves to the next period: slot k becomes slot k-1. Slot 0 must be empty.
  void shift();
  double total() const;

 private:
  std::vector<double> slots_;
  int base_ = 0;
};

/// Per-period lists of job indices, built once so incremental walks do not
/// rescan the job vector.
class ArrivalIndex {
 public:
  explicit ArrivalIndex(const Scenario& s);
  const std::vector<std::int32_t>& at(int period) const;

 private:
  std::vector<std::vector<std::int32_t>> by_period_;
  std::vector<std::int32_t> empty_;
};

/// Incremental simulation state for one left-to-right pass: at any point the
/// current period's arrivals have been ingested and a price has not yet been
/// posted.
class LoadState {
 public:
  LoadState(const Scenario& s, const ArrivalIndex& arrivals);

  int period() const { return period_; }
  bool done() const { return period_ > scenario_->horizon; }
  /// Consumption if `price_index` were posted in the current period.
  double peek(int price_index) const { return buckets_.peek(price_index); }
  /// Posts `price_index`, returns the realized consumption, and advances to
  /// the next period (ingesting its arrivals).
  double commit(int price_index);
  const DemandBuckets& buckets() const { return buckets_; }

 private:
  void ingest();

  const Scenario* scenario_;
  const ArrivalIndex* arrivals_;
  DemandBuckets buckets_;
  int period_ = 1;
};

}  // namespace gridprice
