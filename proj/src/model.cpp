#include "gridprice/model.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace gridprice {

double Scenario::total_demand() const {
  double sum = 0.0;
  for (const Job& j : jobs) sum += j.demand;
  return sum;
}

PriceSchedule PriceSchedule::constant(int index, int horizon) {
  PriceSchedule sched;
  sched.indices.assign(static_cast<std::size_t>(horizon), index);
  return sched;
}

std::vector<std::string> validate(const Scenario& s) {
  std::vector<std::string> errors;
  if (s.horizon < 1) errors.push_back("horizon must be at least 1");
  if (s.max_deadline < 1) errors.push_back("max deadline must be at least 1");
  if (static_cast<int>(s.thresholds.size()) != s.max_deadline) {
    std::ostringstream os;
    os << "threshold ladder has " << s.thresholds.size() << " levels, expected "
       << s.max_deadline;
    errors.push_back(os.str());
  }
  for (std::size_t i = 0; i + 1 < s.thresholds.size(); ++i) {
    if (!(s.thresholds[i] > s.thresholds[i + 1])) {
      std::ostringstream os;
      os << "threshold ladder not strictly decreasing at level " << i + 2;
      errors.push_back(os.str());
      break;
    }
  }
  for (const Job& j : s.jobs) {
    std::ostringstream os;
    if (j.arrival < 1 || j.arrival > s.horizon) {
      os << "job " << j.id << ": arrival " << j.arrival << " outside [1, "
         << s.horizon << "]";
      errors.push_back(os.str());
      continue;
    }
    if (j.deadline_class < 1 || j.deadline_class > s.max_deadline) {
      os << "job " << j.id << ": deadline class " << j.deadline_class
         << " outside [1, " << s.max_deadline << "]";
      errors.push_back(os.str());
      continue;
    }
    if (j.deadline() > s.horizon) {
      os << "job " << j.id << ": deadline beyond horizon (" << j.deadline()
         << " > " << s.horizon << ")";
      errors.push_back(os.str());
      continue;
    }
    if (j.demand < 0.0) {
      os << "job " << j.id << ": negative demand";
      errors.push_back(os.str());
    }
  }
  if (s.supply && static_cast<int>(s.supply->size()) != s.horizon) {
    std::ostringstream os;
    os << "supply has " << s.supply->size() << " entries, expected "
       << s.horizon;
    errors.push_back(os.str());
  }
  return errors;
}

namespace {

std::string join_messages(const std::vector<std::string>& messages) {
  std::string out;
  for (std::size_t i = 0; i < messages.size(); ++i) {
    if (i) out += "; ";
    out += messages[i];
  }
  return out;
}

}  // namespace

void require_valid(const Scenario& s) {
  auto errors = validate(s);
  if (!errors.empty()) throw ValidationError(join_messages(errors));
}

void require_valid_schedule(const Scenario& s, const PriceSchedule& schedule) {
  if (schedule.horizon() != s.horizon) {
    std::ostringstream os;
    os << "schedule has " << schedule.horizon() << " periods, expected "
       << s.horizon;
    throw ValidationError(os.str());
  }
  for (int idx : schedule.indices) {
    if (idx < 1 || idx > s.max_deadline) {
      std::ostringstream os;
      os << "price index " << idx << " outside [1, " << s.max_deadline << "]";
      throw ValidationError(os.str());
    }
  }
}

ConsumptionProfile simulate(const Scenario& s, const PriceSchedule& schedule) {
  require_valid(s);
  require_valid_schedule(s, schedule);
  ConsumptionProfile profile;
  profile.u.assign(static_cast<std::size_t>(s.horizon), 0.0);

  ArrivalIndex arrivals(s);
  LoadState state(s, arrivals);
  for (int k = 1; k <= s.horizon; ++k) {
    profile.u[static_cast<std::size_t>(k - 1)] =
        state.commit(schedule.indices[static_cast<std::size_t>(k - 1)]);
  }

  for (const Job& j : s.jobs) {
    for (int k = j.arrival; k <= j.deadline(); ++k) {
      const int time_to_go = j.deadline() - k + 1;
      if (schedule.indices[static_cast<std::size_t>(k - 1)] >= time_to_go) {
        profile.consumed_at[j.id] = k;
        break;
      }
    }
  }
  return profile;
}

double consumption_at(const Scenario& s, const std::vector<int>& window_indices,
                      int period) {
  require_valid(s);
  if (period < 1 || period > s.horizon) {
    std::ostringstream os;
    os << "period " << period << " outside [1, " << s.horizon << "]";
    throw ValidationError(os.str());
  }
  const int start = std::max(1, period - s.max_deadline + 1);
  const int expected = period - start + 1;
  if (static_cast<int>(window_indices.size()) != expected) {
    std::ostringstream os;
    os << "window has " << window_indices.size() << " indices, expected "
       << expected << " covering periods [" << start << ", " << period << "]";
    throw ValidationError(os.str());
  }
  for (int idx : window_indices) {
    if (idx < 1 || idx > s.max_deadline) {
      std::ostringstream os;
      os << "price index " << idx << " outside [1, " << s.max_deadline << "]";
      throw ValidationError(os.str());
    }
  }

  DemandBuckets buckets(s.max_deadline);
  double last = 0.0;
  for (int k = start; k <= period; ++k) {
    for (const Job& j : s.jobs) {
      if (j.arrival == k) buckets.add(j.deadline() - k, j.demand);
    }
    last = buckets.consume(window_indices[static_cast<std::size_t>(k - start)]);
    buckets.shift();
  }
  return last;
}

double peak(const ConsumptionProfile& profile) {
  double best = 0.0;
  for (double v : profile.u) best = std::max(best, v);
  return best;
}

double mse(const ConsumptionProfile& profile, const std::vector<double>& supply) {
  if (supply.size() != profile.u.size()) {
    throw ValidationError("supply length does not match profile length");
  }
  if (profile.u.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < profile.u.size(); ++i) {
    const double gap = profile.u[i] - supply[i];
    sum += gap * gap;
  }
  return sum / static_cast<double>(profile.u.size());
}

double evaluate(const Scenario& s, const PriceSchedule& schedule,
                Objective objective) {
  ConsumptionProfile profile = simulate(s, schedule);
  if (objective == Objective::peak_min) return peak(profile);
  if (!s.supply) throw ValidationError("match_supply objective requires supply");
  return mse(profile, *s.supply);
}

DemandBuckets::DemandBuckets(int max_deadline)
    : slots_(static_cast<std::size_t>(max_deadline), 0.0) {}

void DemandBuckets::add(int periods_until_deadline, double demand) {
  assert(periods_until_deadline >= 0 &&
         periods_until_deadline < static_cast<int>(slots_.size()));
  const std::size_t n = slots_.size();
  slots_[(static_cast<std::size_t>(base_) +
          static_cast<std::size_t>(periods_until_deadline)) % n] += demand;
}

double DemandBuckets::peek(int price_index) const {
  const std::size_t n = slots_.size();
  const std::size_t take = std::min(static_cast<std::size_t>(price_index), n);
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) {
    sum += slots_[(static_cast<std::size_t>(base_) + i) % n];
  }
  return sum;
}

double DemandBuckets::consume(int price_index) {
  const std::size_t n = slots_.size();
  const std::size_t take = std::min(static_cast<std::size_t>(price_index), n);
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) {
    double& slot = slots_[(static_cast<std::size_t>(base_) + i) % n];
    sum += slot;
    slot = 0.0;
  }
  return sum;
}

void DemandBuckets::shift() {
  assert(slots_[static_cast<std::size_t>(base_)] == 0.0);
  base_ = (base_ + 1) % static_cast<int>(slots_.size());
}

double DemandBuckets::total() const {
  return std::accumulate(slots_.begin(), slots_.end(), 0.0);
}

ArrivalIndex::ArrivalIndex(const Scenario& s)
    : by_period_(static_cast<std::size_t>(s.horizon) + 1) {
  for (std::size_t i = 0; i < s.jobs.size(); ++i) {
    const int a = s.jobs[i].arrival;
    if (a >= 1 && a <= s.horizon) {
      by_period_[static_cast<std::size_t>(a)].push_back(
          static_cast<std::int32_t>(i));
    }
  }
}

const std::vector<std::int32_t>& ArrivalIndex::at(int period) const {
  if (period < 1 || period >= static_cast<int>(by_period_.size())) return empty_;
  return by_period_[static_cast<std::size_t>(period)];
}

LoadState::LoadState(const Scenario& s, const ArrivalIndex& arrivals)
    : scenario_(&s), arrivals_(&arrivals), buckets_(s.max_deadline) {
  ingest();
}

double LoadState::commit(int price_index) {
  const double consumed = buckets_.consume(price_index);
  buckets_.shift();
  ++period_;
  if (!done()) ingest();
  return consumed;
}

void LoadState::ingest() {
  for (std::int32_t ji : arrivals_->at(period_)) {
    const Job& j = scenario_->jobs[static_cast<std::size_t>(ji)];
    buckets_.add(j.deadline() - period_, j.demand);
  }
}

}  // namespace gridprice
