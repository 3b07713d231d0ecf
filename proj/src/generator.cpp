#include "gridprice/generator.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gridprice/rng.hpp"

namespace gridprice {

DemandModel DemandModel::homogeneous(double value) {
  DemandModel m;
  m.kind = Kind::homogeneous;
  m.value = value;
  return m;
}

DemandModel DemandModel::empirical(std::vector<double> pool) {
  DemandModel m;
  m.kind = Kind::empirical;
  m.pool = std::move(pool);
  return m;
}

std::vector<double> canonical_ladder(int max_deadline) {
  std::vector<double> ladder(static_cast<std::size_t>(max_deadline));
  for (int t = 1; t <= max_deadline; ++t) {
    ladder[static_cast<std::size_t>(t - 1)] =
        static_cast<double>(max_deadline - t + 1);
  }
  return ladder;
}

Scenario generate_scenario(int horizon, int max_deadline,
                           const std::vector<double>& alphas,
                           const DemandModel& demand, std::uint64_t seed) {
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  if (max_deadline < 1) {
    throw ValidationError("max deadline must be at least 1");
  }
  if (static_cast<int>(alphas.size()) != max_deadline) {
    std::ostringstream os;
    os << "expected " << max_deadline << " arrival rates, got "
       << alphas.size();
    throw ValidationError(os.str());
  }
  for (double a : alphas) {
    if (a < 0.0) throw ValidationError("arrival rates must be nonnegative");
  }
  if (demand.kind == DemandModel::Kind::homogeneous) {
    if (demand.value < 0.0) throw ValidationError("demand must be nonnegative");
  } else if (demand.pool.empty()) {
    throw ValidationError("empirical demand pool is empty");
  }

  Scenario s;
  s.horizon = horizon;
  s.max_deadline = max_deadline;
  s.thresholds = canonical_ladder(max_deadline);

  SplitMix64 rng(seed);
  std::int64_t next_id = 1;
  for (int k = 1; k <= horizon; ++k) {
    for (int n = 1; n <= max_deadline; ++n) {
      const double alpha = alphas[static_cast<std::size_t>(n - 1)];
      const std::uint64_t count = rng.next_poisson(alpha);
      const int clamped = std::min(n, horizon - k + 1);
      for (std::uint64_t c = 0; c < count; ++c) {
        Job j;
        j.id = next_id++;
        j.arrival = k;
        j.deadline_class = clamped;
        j.demand = demand.kind == DemandModel::Kind::homogeneous
                       ? demand.value
                       : demand.pool[static_cast<std::size_t>(
                             rng.next_below(demand.pool.size()))];
        s.jobs.push_back(j);
      }
    }
  }
  return s;
}

Scenario ingest_jobs_csv(const std::string& path, int max_deadline,
                         std::uint64_t seed, int horizon_override) {
  if (max_deadline < 1) {
    throw ValidationError("max deadline must be at least 1");
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);

  std::vector<std::string> errors;
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError(path + ": missing header row");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "job_id,arrival,demand") {
    throw ValidationError(path + ": line 1: expected header job_id,arrival,demand");
  }

  struct Row {
    std::int64_t id;
    int arrival;
    double demand;
  };
  std::vector<Row> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string id_text, arrival_text, demand_text, extra;
    std::ostringstream err;
    if (!std::getline(fields, id_text, ',') ||
        !std::getline(fields, arrival_text, ',') ||
        !std::getline(fields, demand_text, ',')) {
      err << path << ": line " << line_no << ": expected 3 fields";
      errors.push_back(err.str());
      continue;
    }
    if (std::getline(fields, extra, ',')) {
      err << path << ": line " << line_no << ": expected 3 fields";
      errors.push_back(err.str());
      continue;
    }
    Row row{};
    try {
      std::size_t used = 0;
      row.id = std::stoll(id_text, &used);
      if (used != id_text.size()) throw std::invalid_argument(id_text);
      row.arrival = std::stoi(arrival_text, &used);
      if (used != arrival_text.size()) throw std::invalid_argument(arrival_text);
      row.demand = std::stod(demand_text, &used);
      if (used != demand_text.size()) throw std::invalid_argument(demand_text);
    } catch (const std::exception&) {
      err << path << ": line " << line_no << ": malformed row";
      errors.push_back(err.str());
      continue;
    }
    if (row.arrival < 1) {
      err << path << ": line " << line_no << ": arrival must be >= 1";
      errors.push_back(err.str());
      continue;
    }
    if (row.demand < 0.0) {
      err << path << ": line " << line_no << ": negative demand";
      errors.push_back(err.str());
      continue;
    }
    rows.push_back(row);
  }
  if (!errors.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (i) joined += "; ";
      joined += errors[i];
    }
    throw ValidationError(joined);
  }

  int horizon = horizon_override;
  if (horizon <= 0) {
    horizon = 1;
    for (const Row& row : rows) horizon = std::max(horizon, row.arrival);
  } else {
    for (const Row& row : rows) {
      if (row.arrival > horizon) {
        std::ostringstream os;
        os << path << ": arrival " << row.arrival << " beyond horizon "
           << horizon;
        throw ValidationError(os.str());
      }
    }
  }

  Scenario s;
  s.horizon = horizon;
  s.max_deadline = max_deadline;
  s.thresholds = canonical_ladder(max_deadline);
  SplitMix64 rng(seed);
  for (const Row& row : rows) {
    Job j;
    j.id = row.id;
    j.arrival = row.arrival;
    const int limit = std::min(max_deadline, horizon - row.arrival + 1);
    j.deadline_class =
        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(limit)));
    j.demand = row.demand;
    s.jobs.push_back(j);
  }
  return s;
}

std::vector<double> flat_supply(const Scenario& s) {
  const double level =
      (s.total_demand() + 0.5) / static_cast<double>(s.horizon);
  return std::vector<double>(static_cast<std::size_t>(s.horizon), level);
}

std::vector<double> matched_supply(const Scenario& s, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PriceSchedule schedule;
  schedule.indices.reserve(static_cast<std::size_t>(s.horizon));
  for (int k = 0; k < s.horizon; ++k) {
    schedule.indices.push_back(
        1 + static_cast<int>(rng.next_below(
                static_cast<std::uint64_t>(s.max_deadline))));
  }
  return simulate(s, schedule).u;
}

}  // namespace gridprice
