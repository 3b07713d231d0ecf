#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridprice/model.hpp"

namespace gridprice {

/// How job demands are drawn: every job the same `value`, or one uniform pick
/// from `pool` per job (an empirical sample played back).
struct DemandModel {
  enum class Kind { homogeneous, empirical };
  Kind kind = Kind::homogeneous;
  double value = 1.0;
  std::vector<double> pool;

  static DemandModel homogeneous(double value);
  static DemandModel empirical(std::vector<double> pool);
};

/// Canonical strictly decreasing ladder N, N-1, ..., 1 used for generated and
/// ingested scenarios (only the ordering matters to the consumption rule).
std::vector<double> canonical_ladder(int max_deadline);

/// Seeded scenario draw. Per period k = 1..K and class n = 1..N (k-major
/// order), the arrival count is Poisson(alphas[n-1]); each job's demand is
/// drawn immediately after its count. Classes are clamped to the remaining
/// horizon (min(n, K-k+1)) before job creation so every deadline fits.
Scenario generate_scenario(int horizon, int max_deadline,
                           const std::vector<double>& alphas,
                           const DemandModel& demand, std::uint64_t seed);

/// Reads rows `job_id,arrival,demand` (exact header), assigns each job a
/// seeded uniform deadline class in [1, min(N, K-arrival+1)] in row order,
/// with K = max arrival unless horizon_override > 0. Malformed rows are
/// reported all at once with their line numbers.
Scenario ingest_jobs_csv(const std::string& path, int max_deadline,
                         std::uint64_t seed, int horizon_override = 0);

/// Flat supply (total demand + 1/2) / K: keeps the optimal mean squared error
/// strictly positive for integer total demand, so approximation ratios stay
/// well defined.
std::vector<double> flat_supply(const Scenario& s);

/// Supply realized by a seeded uniformly random schedule; the optimal mean
/// squared error against it is exactly zero.
std::vector<double> matched_supply(const Scenario& s, std::uint64_t seed);

}  // namespace gridprice
