#pragma once

#include <cstdint>
#include <string>

#include "gridprice/model.hpp"

namespace gridprice {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct SolveResult {
  PriceSchedule schedule;
  double objective_value = 0.0;
  double elapsed_ms = 0.0;
  std::string method;
};

/// Per-period local optimization: at each period picks the index minimizing
/// the immediate criterion (consumption for peak_min, squared gap to supply
/// for match_supply) given everything already committed. Ties pick the
/// smallest index, i.e. the highest price and the smallest consuming set.
SolveResult greedy(const Scenario& s, Objective objective);

/// Receding-horizon exhaustive search: windows [first, first+W-1] slide one
/// period at a time; each window's best sequence (given the committed prefix)
/// is written over the whole window, so only its first price survives except
/// in the final window, whose tail fills the remaining positions.
SolveResult sliding_window(const Scenario& s, Objective objective, int window,
                           std::uint64_t budget = kDefaultEnumerationBudget);

struct UniformResult {
  SolveResult result;
  int chosen_index = 1;
};

/// Best constant schedule (t, t, ..., t); ties pick the smallest t.
UniformResult uniform_best(const Scenario& s, Objective objective);

/// Exact optimum by enumerating all N^K schedules; refuses (BudgetError) when
/// that exceeds `budget`. Ties pick the lexicographically smallest index
/// sequence.
SolveResult brute_force(const Scenario& s, Objective objective,
                        std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace gridprice
