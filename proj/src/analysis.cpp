#include "gridprice/analysis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gridprice/errors.hpp"

namespace gridprice {

PeakBounds lemma_bounds(const Scenario& s) {
  require_valid(s);
  PeakBounds bounds;
  bounds.max_arrivals.assign(static_cast<std::size_t>(s.max_deadline), 0);
  bounds.min_arrivals.assign(static_cast<std::size_t>(s.max_deadline), 0);
  if (s.jobs.empty()) return bounds;

  const double d = s.jobs.front().demand;
  for (const Job& j : s.jobs) {
    if (j.demand != d) {
      throw ValidationError("lemma_bounds requires homogeneous demands");
    }
  }

  std::vector<std::vector<int>> counts(
      static_cast<std::size_t>(s.max_deadline),
      std::vector<int>(static_cast<std::size_t>(s.horizon), 0));
  for (const Job& j : s.jobs) {
    ++counts[static_cast<std::size_t>(j.deadline_class - 1)]
            [static_cast<std::size_t>(j.arrival - 1)];
  }

  for (int n = 0; n < s.max_deadline; ++n) {
    int lo = counts[static_cast<std::size_t>(n)][0];
    int hi = lo;
    for (int k = 1; k < s.horizon; ++k) {
      const int c = counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    bounds.max_arrivals[static_cast<std::size_t>(n)] = hi;
    bounds.min_arrivals[static_cast<std::size_t>(n)] = lo;
    bounds.upper += d * hi;
    bounds.lower += d * lo;
  }
  return bounds;
}

namespace {

void require_series_inputs(double alpha, int draws, double eps) {
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (draws < 1) throw ValidationError("draw count must be at least 1");
  if (!(eps > 0.0)) throw ValidationError("eps must be positive");
}

/// Streams Poisson(alpha) pmf values; at() must be called with x = 0, 1, 2,
/// ... in order. For alpha <= 50 the multiplicative recursion from exp(-alpha)
/// is stable; for larger alpha that starting point loses too much range, so
/// each term is formed in log space instead.
class PoissonPmf {
 public:
  explicit PoissonPmf(double alpha)
      : alpha_(alpha), log_space_(alpha > 50.0), value_(std::exp(-alpha)) {}

  double at(int x) {
    if (!log_space_) {
      if (x > 0) value_ *= alpha_ / static_cast<double>(x);
      return value_;
    }
    const double lx = static_cast<double>(x);
    return std::exp(-alpha_ + lx * std::log(alpha_) - std::lgamma(lx + 1.0));
  }

 private:
  double alpha_;
  bool log_space_;
  double value_;
};

}  // namespace

double expected_max_poisson(double alpha, int draws, double eps) {
  require_series_inputs(alpha, draws, eps);
  PoissonPmf pmf(alpha);
  double cdf = 0.0;
  double sum = 0.0;
  for (int x = 0;; ++x) {
    cdf += pmf.at(x);
    if (cdf > 1.0) cdf = 1.0;
    const double term = 1.0 - std::pow(cdf, draws);
    sum += term;
    if (static_cast<double>(x) >= alpha && term < eps) break;
  }
  return sum;
}

double expected_min_poisson(double alpha, int draws, double eps) {
  require_series_inputs(alpha, draws, eps);
  PoissonPmf pmf(alpha);
  double cdf_prev = pmf.at(0);  // F(x-1) as x walks up from 1
  double sum = 0.0;
  for (int x = 1;; ++x) {
    const double tail = cdf_prev >= 1.0 ? 0.0 : 1.0 - cdf_prev;
    const double term = std::pow(tail, draws);
    sum += term;
    if (static_cast<double>(x) >= alpha && term < eps) break;
    cdf_prev += pmf.at(x);
  }
  return sum;
}

RatioBound ratio_bound(const std::vector<double>& alphas, int draws,
                       double eps) {
  if (alphas.empty()) throw ValidationError("at least one alpha is required");
  RatioBound bound;
  for (std::size_t n = 0; n < alphas.size(); ++n) {
    const double emax = expected_max_poisson(alphas[n], draws, eps);
    const double emin = expected_min_poisson(alphas[n], draws, eps);
    if (emin < std::numeric_limits<double>::min()) {
      bound.value = std::numeric_limits<double>::infinity();
      bound.unbounded = true;
      bound.arg_class = static_cast<int>(n) + 1;
      std::ostringstream os;
      os << "E[A_min] underflowed to " << emin << " for alpha = " << alphas[n]
         << " with " << draws << " draws; the ratio bound is unbounded here";
      bound.diagnostic = os.str();
      return bound;
    }
    const double ratio = emax / emin;
    if (n == 0 || ratio > bound.value) {
      bound.value = ratio;
      bound.arg_class = static_cast<int>(n) + 1;
    }
  }
  return bound;
}

}  // namespace gridprice
