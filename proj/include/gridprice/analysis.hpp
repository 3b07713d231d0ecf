#pragma once

#include <string>
#include <vector>

#include "gridprice/model.hpp"

namespace gridprice {

struct PeakBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// Per deadline class n (1-based via index n-1): max / min of the arrival
  /// count A_n(k) over the horizon.
  std::vector<int> max_arrivals;
  std::vector<int> min_arrivals;
};

/// Peak-demand sandwich for homogeneous demand d:
///   upper = d * sum_n max_k A_n(k)   (no algorithm can beat spreading the
///                                     worst per-class burst)
///   lower = d * sum_n min_k A_n(k)
/// Requires every job to carry the same demand; throws ValidationError
/// otherwise. An empty job list yields (0, 0).
PeakBounds lemma_bounds(const Scenario& s);

/// E[max of K iid Poisson(alpha) draws] = sum_{x>=0} (1 - F(x)^K), truncated
/// once the term falls below eps past the mean (the tail is monotone).
double expected_max_poisson(double alpha, int draws, double eps = 1e-12);

/// E[min of K iid Poisson(alpha) draws] = sum_{x>=1} (1 - F(x-1))^K.
double expected_min_poisson(double alpha, int draws, double eps = 1e-12);

struct RatioBound {
  double value = 0.0;
  bool unbounded = false;
  /// 1-based class attaining the max ratio (or triggering the underflow).
  int arg_class = 0;
  std::string diagnostic;
};

/// max over classes of E[A_max]/E[A_min] for `draws` iid draws per class.
/// When some E[A_min] underflows to zero the bound is reported as unbounded
/// instead of dividing by it.
RatioBound ratio_bound(const std::vector<double>& alphas, int draws,
                       double eps = 1e-12);

}  // namespace gridprice
