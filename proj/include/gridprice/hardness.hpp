#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridprice/errors.hpp"

namespace gridprice {

/// Exact fraction on 64-bit numerator/denominator, normalized (gcd 1,
/// denominator > 0). Intermediates go through 128 bits; results that do not
/// fit 64 bits throw std::overflow_error. The yes/no boundary this module
/// decides is an exact equality, so floats are never used here.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(std::int64_t integer) : num_(integer) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Subset-Sum input: positive values sorted nonincreasing, positive target.
struct SubsetSumInstance {
  std::vector<std::int64_t> values;
  std::int64_t target = 0;
};

std::vector<std::string> validate(const SubsetSumInstance& instance);
void require_valid(const SubsetSumInstance& instance);

/// Consumer produced by the reduction: arrives at `arrival`, may consume any
/// period up to `departure`, buys whenever the posted price is below its own
/// static threshold. All monetary/energy quantities are stored doubled so the
/// half-integer supplies and price levels are exact integers.
struct ReducedConsumer {
  int arrival = 0;
  int departure = 0;
  std::int64_t threshold_doubled = 0;
  std::int64_t demand_doubled = 0;
};

struct ReducedScenario {
  int periods = 0;  // K + 1
  std::vector<ReducedConsumer> consumers;
  std::vector<std::int64_t> supply_doubled;  // 2*S(k); length K + 1
};

/// Subset-Sum instance (a_1..a_K, B) -> supply-matching scenario with K
/// consumers over K+1 periods: consumer i arrives at period i with demand a_i
/// and threshold i; supply is a_k/2 for k <= K and B at period K+1.
ReducedScenario reduce(const SubsetSumInstance& instance);

/// The exact optimum-MSE value a yes-instance attains:
/// (1/(K+1)) * sum_k a_k^2 / 4.
Rational alpha_threshold(const SubsetSumInstance& instance);

struct VerifyResult {
  bool is_yes = false;
  Rational best_omega;
  /// 1-based positions (ascending) of a subset of `values` summing exactly to
  /// `target` (the consumers deferring to the last period); present iff yes.
  /// Lexicographically smallest among optimal subsets.
  std::optional<std::vector<int>> witness;
};

/// Decides the instance by enumerating which consumers defer to the final
/// period: omega(D) = (1/(K+1)) * [sum_k a_k^2/4 + (sum(D) - B)^2]; the
/// minimum equals alpha_threshold exactly iff some subset hits the target.
/// Refuses (BudgetError) when 2^K exceeds `budget`.
VerifyResult verify(const SubsetSumInstance& instance,
                    std::uint64_t budget = 1ull << 20);

/// Independent route to the same optimum: enumerate every price vector over
/// the K+1 decisive levels (one below all thresholds, one between each
/// consecutive pair, one above all: doubled odd integers 1, 3, ..., 2K+1),
/// run the threshold consumers, and take the best mean squared error.
/// Consumers that never see an acceptable price simply never consume.
/// Refuses (BudgetError) when (K+1)^(K+1) exceeds `budget`.
Rational price_enumeration_optimum(const ReducedScenario& reduced,
                                   std::uint64_t budget = 1ull << 20);

}  // namespace gridprice
