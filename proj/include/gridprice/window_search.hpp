#pragma once

#include <cstdint>
#include <vector>

#include "gridprice/model.hpp"

namespace gridprice {

/// Demand landing at one window offset: at that period the load has `slot`
/// periods left before its deadline (0 = due that same period).
struct WindowArrival {
  int slot = 0;
  double demand = 0.0;
};

/// One exhaustive-search subproblem: choose `length` price indices for
/// consecutive periods, starting from `carried` pending demand (positioned at
/// the first period, before that period's arrivals are ingested).
struct WindowSpec {
  int length = 0;
  int max_index = 1;
  std::vector<std::vector<WindowArrival>> arrivals;
  DemandBuckets carried;
  Objective objective = Objective::peak_min;
  std::vector<double> supply;
};

struct WindowBest {
  std::vector<int> indices;
  double value = 0.0;
};

/// Depth-first enumeration of all max_index^length sequences with
/// branch-and-bound pruning. Ties resolve to the lexicographically smallest
/// index sequence (equivalently the highest price sequence): candidates are
/// visited in ascending index order and replace the incumbent only on strict
/// improvement, and pruning on >= never discards a strict improver.
/// Throws BudgetError when max_index^length exceeds `budget` leaves.
WindowBest best_window_sequence(const WindowSpec& spec, std::uint64_t budget);

/// True iff max_index^length fits in uint64 and is <= budget.
bool sequence_count_within(std::uint64_t max_index, std::uint64_t length,
                           std::uint64_t budget);

}  // namespace gridprice
