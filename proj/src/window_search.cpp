#include "gridprice/window_search.hpp"

#include <limits>
#include <sstream>

#include "gridprice/errors.hpp"

namespace gridprice {

bool sequence_count_within(std::uint64_t max_index, std::uint64_t length,
                           std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < length; ++i) {
    if (count > budget / (max_index == 0 ? 1 : max_index)) return false;
    count *= max_index;
    if (count > budget) return false;
  }
  return true;
}

namespace {

class Search {
 public:
  explicit Search(const WindowSpec& spec)
      : spec_(spec),
        states_(static_cast<std::size_t>(spec.length) + 1),
        path_(static_cast<std::size_t>(spec.length), 0) {
    states_[0] = spec.carried;
    for (const WindowArrival& a : spec_.arrivals[0]) {
      states_[0].add(a.slot, a.demand);
    }
  }

  WindowBest run() {
    descend(0, spec_.objective == Objective::peak_min
                   ? -std::numeric_limits<double>::infinity()
                   : 0.0);
    return WindowBest{best_path_, best_};
  }

 private:
  void descend(int depth, double partial) {
    const std::size_t d = static_cast<std::size_t>(depth);
    for (int t = 1; t <= spec_.max_index; ++t) {
      const double u = states_[d].peek(t);
      double value;
      if (spec_.objective == Objective::peak_min) {
        value = partial > u ? partial : u;
      } else {
        const double gap = u - spec_.supply[d];
        value = partial + gap * gap;
      }
      if (has_best_ && value >= best_) continue;
      path_[d] = t;
      if (depth + 1 == spec_.length) {
        best_ = value;
        best_path_ = path_;
        has_best_ = true;
        continue;
      }
      states_[d + 1] = states_[d];
      states_[d + 1].consume(t);
      states_[d + 1].shift();
      for (const WindowArrival& a : spec_.arrivals[d + 1]) {
        states_[d + 1].add(a.slot, a.demand);
      }
      descend(depth + 1, value);
    }
  }

  const WindowSpec& spec_;
  std::vector<DemandBuckets> states_;
  std::vector<int> path_;
  std::vector<int> best_path_;
  double best_ = std::numeric_limits<double>::infinity();
  bool has_best_ = false;
};

}  // namespace

WindowBest best_window_sequence(const WindowSpec& spec, std::uint64_t budget) {
  if (spec.length < 1) throw ValidationError("window length must be at least 1");
  if (spec.max_index < 1) throw ValidationError("price ladder is empty");
  if (static_cast<int>(spec.arrivals.size()) != spec.length) {
    throw ValidationError("window arrivals do not cover the window");
  }
  if (spec.objective == Objective::match_supply &&
      static_cast<int>(spec.supply.size()) != spec.length) {
    throw ValidationError("window supply does not cover the window");
  }
  if (!sequence_count_within(static_cast<std::uint64_t>(spec.max_index),
                             static_cast<std::uint64_t>(spec.length), budget)) {
    std::ostringstream os;
    os << "window enumeration of " << spec.max_index << "^" << spec.length
       << " sequences exceeds budget " << budget;
    throw BudgetError(os.str());
  }
  return Search(spec).run();
}

}  // namespace gridprice
