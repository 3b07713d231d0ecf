#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gridprice/errors.hpp"
#include "gridprice/hardness.hpp"
#include "gridprice/rng.hpp"
#include "reference.hpp"

using namespace gridprice;

TEST_CASE("rationals normalize and compute exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 8) <= Rational(7, 8));
  CHECK(Rational(2) > Rational(5, 3));

  CHECK(Rational(7, 8).str() == "7/8");
  CHECK(Rational(2).str() == "2");
  CHECK((Rational(1, 2) - Rational(3, 4)).str() == "-1/4");
  CHECK(Rational(1, 2).to_double() == 0.5);
}

TEST_CASE("rationals refuse what cannot be represented") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(Rational(big) * Rational(big), std::overflow_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("instance validation") {
  CHECK(validate(SubsetSumInstance{{3, 2, 1}, 3}).empty());
  CHECK(!validate(SubsetSumInstance{{}, 3}).empty());
  CHECK(!validate(SubsetSumInstance{{1, 2}, 3}).empty());   // not nonincreasing
  CHECK(!validate(SubsetSumInstance{{2, 0}, 1}).empty());   // nonpositive value
  CHECK(!validate(SubsetSumInstance{{2, 1}, 0}).empty());   // nonpositive target
  CHECK_THROWS_AS(require_valid(SubsetSumInstance{{}, 1}), ValidationError);
}

TEST_CASE("threshold value of a yes instance") {
  CHECK(alpha_threshold({{2}, 2}) == Rational(1, 2));
  CHECK(alpha_threshold({{3, 2, 1}, 3}) == Rational(7, 8));
}

TEST_CASE("the reduction lays out consumers and supply as promised") {
  const ReducedScenario r = reduce({{3, 2, 1}, 3});
  REQUIRE(r.periods == 4);
  REQUIRE(r.consumers.size() == 3);

  CHECK(r.consumers[0].arrival == 1);
  CHECK(r.consumers[0].departure == 4);
  CHECK(r.consumers[0].threshold_doubled == 2);
  CHECK(r.consumers[0].demand_doubled == 6);

  CHECK(r.consumers[1].arrival == 2);
  CHECK(r.consumers[1].threshold_doubled == 4);
  CHECK(r.consumers[1].demand_doubled == 4);

  CHECK(r.consumers[2].arrival == 3);
  CHECK(r.consumers[2].threshold_doubled == 6);
  CHECK(r.consumers[2].demand_doubled == 2);

  CHECK(r.supply_doubled == std::vector<std::int64_t>{3, 2, 1, 6});
}

TEST_CASE("verification decides the classic examples") {
  SUBCASE("yes with competing witnesses picks the lexicographically least") {
    const VerifyResult v = verify({{3, 2, 1}, 3});
    CHECK(v.is_yes);
    CHECK(v.best_omega == Rational(7, 8));
    CHECK(v.best_omega == alpha_threshold({{3, 2, 1}, 3}));
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == std::vector<int>{1});  // beats {2, 3}
  }
  SUBCASE("no instance lands strictly above the threshold") {
    const VerifyResult v = verify({{4, 2}, 5});
    CHECK(!v.is_yes);
    CHECK(!v.witness.has_value());
    CHECK(v.best_omega == Rational(2));
    CHECK(v.best_omega > alpha_threshold({{4, 2}, 5}));
  }
  SUBCASE("singleton yes") {
    const VerifyResult v = verify({{2}, 2});
    CHECK(v.is_yes);
    CHECK(v.best_omega == Rational(1, 2));
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == std::vector<int>{1});
  }
  SUBCASE("equal values tie toward earlier positions") {
    const VerifyResult v = verify({{1, 1}, 1});
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == std::vector<int>{1});

    const VerifyResult w = verify({{2, 1, 1}, 2});
    REQUIRE(w.witness.has_value());
    CHECK(*w.witness == std::vector<int>{1});
  }
}

TEST_CASE("verification agrees with dynamic programming on random instances") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(12));
    std::vector<std::int64_t> values(static_cast<std::size_t>(k));
    for (auto& v : values) v = 1 + static_cast<std::int64_t>(rng.next_below(30));
    std::sort(values.begin(), values.end(), std::greater<>());
    const std::int64_t total = std::accumulate(values.begin(), values.end(),
                                               std::int64_t{0});
    const std::int64_t target =
        1 + static_cast<std::int64_t>(rng.next_below(
                static_cast<std::uint64_t>(total + 3)));
    const SubsetSumInstance instance{values, target};

    const VerifyResult v = verify(instance);
    CHECK(v.is_yes == testref::subset_sum_dp(values, target));
    const Rational alpha = alpha_threshold(instance);
    CHECK(v.best_omega >= alpha);
    CHECK((v.best_omega == alpha) == v.is_yes);
    if (v.witness) {
      std::int64_t sum = 0;
      int prev = 0;
      for (int pos : *v.witness) {
        CHECK(pos > prev);  // ascending, 1-based
        prev = pos;
        sum += values[static_cast<std::size_t>(pos - 1)];
      }
      CHECK(sum == target);
    }
  }
}

TEST_CASE("price enumeration reproduces the deferral optimum") {
  SplitMix64 rng(515);
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(5));  // up to 5 values
    std::vector<std::int64_t> values(static_cast<std::size_t>(k));
    for (auto& v : values) v = 1 + static_cast<std::int64_t>(rng.next_below(9));
    std::sort(values.begin(), values.end(), std::greater<>());
    const std::int64_t total = std::accumulate(values.begin(), values.end(),
                                               std::int64_t{0});
    const std::int64_t target =
        1 + static_cast<std::int64_t>(rng.next_below(
                static_cast<std::uint64_t>(total + 2)));
    const SubsetSumInstance instance{values, target};

    const VerifyResult v = verify(instance);
    const Rational enumerated = price_enumeration_optimum(reduce(instance));
    CHECK(enumerated == v.best_omega);
  }
}

TEST_CASE("hardness searches refuse oversized instances") {
  std::vector<std::int64_t> many(25, 1);
  CHECK_THROWS_AS(verify({many, 5}), BudgetError);

  std::vector<std::int64_t> seven(7, 2);
  std::sort(seven.begin(), seven.end(), std::greater<>());
  const ReducedScenario r = reduce({seven, 5});
  CHECK_THROWS_AS(price_enumeration_optimum(r, 1ull << 20), BudgetError);
}
