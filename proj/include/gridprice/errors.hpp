#pragma once

#include <stdexcept>
#include <string>

namespace gridprice {

/// Thrown when a scenario, schedule, or instance violates its invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive routine would exceed its enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridprice
