#include "gridprice/hardness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gridprice {

namespace {

std::int64_t narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_normalized(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num, "rational numerator"),
                  narrow(den, "rational denominator"));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  __int128 num = numerator;
  __int128 den = denominator;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = narrow(num, "rational numerator");
  den_ = narrow(den, "rational denominator");
}

Rational Rational::operator+(const Rational& o) const {
  return make_normalized(static_cast<__int128>(num_) * o.den_ +
                             static_cast<__int128>(o.num_) * den_,
                         static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_normalized(static_cast<__int128>(num_) * o.den_ -
                             static_cast<__int128>(o.num_) * den_,
                         static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_normalized(static_cast<__int128>(num_) * o.num_,
                         static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("division by zero rational");
  return make_normalized(static_cast<__int128>(num_) * o.den_,
                         static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

std::vector<std::string> validate(const SubsetSumInstance& instance) {
  std::vector<std::string> errors;
  if (instance.values.empty()) errors.push_back("value list is empty");
  for (std::size_t i = 0; i < instance.values.size(); ++i) {
    if (instance.values[i] <= 0) {
      std::ostringstream os;
      os << "value " << i + 1 << " is not positive";
      errors.push_back(os.str());
    }
    if (i > 0 && instance.values[i] > instance.values[i - 1]) {
      std::ostringstream os;
      os << "values not sorted nonincreasing at position " << i + 1;
      errors.push_back(os.str());
    }
  }
  if (instance.target <= 0) errors.push_back("target is not positive");
  return errors;
}

void require_valid(const SubsetSumInstance& instance) {
  const auto errors = validate(instance);
  if (!errors.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (i) joined += "; ";
      joined += errors[i];
    }
    throw ValidationError(joined);
  }
}

ReducedScenario reduce(const SubsetSumInstance& instance) {
  require_valid(instance);
  const int k = static_cast<int>(instance.values.size());
  ReducedScenario out;
  out.periods = k + 1;
  out.consumers.reserve(static_cast<std::size_t>(k));
  out.supply_doubled.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    const std::int64_t a = instance.values[static_cast<std::size_t>(i - 1)];
    ReducedConsumer c;
    c.arrival = i;
    c.departure = k + 1;
    c.threshold_doubled = 2 * static_cast<std::int64_t>(i);
    c.demand_doubled = narrow(static_cast<__int128>(2) * a, "doubled demand");
    out.consumers.push_back(c);
    out.supply_doubled.push_back(a);  // 2 * (a/2)
  }
  out.supply_doubled.push_back(
      narrow(static_cast<__int128>(2) * instance.target, "doubled target"));
  return out;
}

Rational alpha_threshold(const SubsetSumInstance& instance) {
  require_valid(instance);
  __int128 sum_sq = 0;
  for (std::int64_t a : instance.values) {
    sum_sq += static_cast<__int128>(a) * a;
  }
  const __int128 den =
      static_cast<__int128>(4) * (static_cast<std::int64_t>(instance.values.size()) + 1);
  const __int128 g = gcd128(sum_sq, den);
  return Rational(narrow(sum_sq / g, "alpha numerator"),
                  narrow(den / g, "alpha denominator"));
}

namespace {

std::vector<int> mask_to_positions(std::uint64_t mask, int k) {
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    if (mask & (1ull << i)) out.push_back(i + 1);
  }
  return out;
}

bool positions_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

VerifyResult verify(const SubsetSumInstance& instance, std::uint64_t budget) {
  require_valid(instance);
  const int k = static_cast<int>(instance.values.size());
  if (k >= 63 || (1ull << k) > budget) {
    std::ostringstream os;
    os << "subset enumeration of 2^" << k << " sets exceeds budget " << budget;
    throw BudgetError(os.str());
  }

  __int128 sum_sq = 0;
  for (std::int64_t a : instance.values) {
    sum_sq += static_cast<__int128>(a) * a;
  }

  __int128 best_err = -1;
  std::vector<int> best_positions;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    __int128 defer_sum = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1ull << i)) {
        defer_sum += instance.values[static_cast<std::size_t>(i)];
      }
    }
    const __int128 gap = defer_sum - instance.target;
    const __int128 err = gap * gap;
    if (best_err < 0 || err < best_err) {
      best_err = err;
      best_positions = mask_to_positions(mask, k);
    } else if (err == best_err) {
      std::vector<int> positions = mask_to_positions(mask, k);
      if (positions_lex_less(positions, best_positions)) {
        best_positions = std::move(positions);
      }
    }
  }

  // omega = (sum_sq/4 + best_err) / (K+1), over a common denominator 4(K+1).
  const __int128 num = sum_sq + 4 * best_err;
  const __int128 den = static_cast<__int128>(4) * (k + 1);
  const __int128 g = gcd128(num, den);
  VerifyResult result;
  result.best_omega = Rational(narrow(num / g, "omega numerator"),
                               narrow(den / g, "omega denominator"));
  result.is_yes = best_err == 0;
  if (result.is_yes) result.witness = best_positions;
  return result;
}

Rational price_enumeration_optimum(const ReducedScenario& reduced,
                                   std::uint64_t budget) {
  const int periods = reduced.periods;
  if (periods < 1) throw ValidationError("reduced scenario has no periods");
  const std::uint64_t levels = static_cast<std::uint64_t>(periods);
  std::uint64_t count = 1;
  for (int i = 0; i < periods; ++i) {
    if (count > budget / levels) {
      std::ostringstream os;
      os << "price enumeration of " << levels << "^" << periods
         << " vectors exceeds budget " << budget;
      throw BudgetError(os.str());
    }
    count *= levels;
  }

  const std::size_t consumer_count = reduced.consumers.size();
  std::vector<int> level_index(static_cast<std::size_t>(periods), 0);
  std::vector<char> consumed(consumer_count, 0);
  __int128 best_err = -1;

  for (std::uint64_t it = 0;; ++it) {
    std::fill(consumed.begin(), consumed.end(), 0);
    __int128 total_err = 0;
    for (int p = 1; p <= periods; ++p) {
      // level j posts doubled price 2j+1 (0.5, 1.5, ... in natural units)
      const std::int64_t price_doubled =
          2 * static_cast<std::int64_t>(level_index[static_cast<std::size_t>(p - 1)]) + 1;
      __int128 u_doubled = 0;
      for (std::size_t c = 0; c < consumer_count; ++c) {
        const ReducedConsumer& rc = reduced.consumers[c];
        if (consumed[c] || rc.arrival > p || rc.departure < p) continue;
        if (price_doubled < rc.threshold_doubled) {
          u_doubled += rc.demand_doubled;
          consumed[c] = 1;
        }
      }
      const __int128 gap =
          u_doubled - reduced.supply_doubled[static_cast<std::size_t>(p - 1)];
      total_err += gap * gap;
    }
    if (best_err < 0 || total_err < best_err) best_err = total_err;

    int pos = periods - 1;
    while (pos >= 0 &&
           level_index[static_cast<std::size_t>(pos)] == periods - 1) {
      level_index[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++level_index[static_cast<std::size_t>(pos)];
  }

  // errors were accumulated in doubled units: (2u - 2S)^2 = 4 (u - S)^2
  const __int128 den = static_cast<__int128>(4) * periods;
  const __int128 g = gcd128(best_err, den);
  return Rational(narrow(best_err / g, "omega numerator"),
                  narrow(den / g, "omega denominator"));
}

}  // namespace gridprice
