#include "gridprice/price_graph.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gridprice/errors.hpp"

namespace gridprice {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  unsigned __int128 v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("graph size exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("graph size exceeds 64 bits");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 v = static_cast<unsigned __int128>(a) * b;
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("graph size exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

GraphSize graph_size(int max_deadline, int horizon) {
  if (max_deadline < 2) {
    throw ValidationError("layered graph needs at least 2 price levels");
  }
  if (horizon < max_deadline) {
    throw ValidationError("layered graph needs horizon >= max deadline");
  }
  const std::uint64_t n = static_cast<std::uint64_t>(max_deadline);
  const std::uint64_t labels = checked_pow(n, max_deadline - 1);
  const std::uint64_t per_step = checked_mul(labels, n);
  const std::uint64_t stages = static_cast<std::uint64_t>(horizon - max_deadline) + 2;
  GraphSize size;
  size.vertices = checked_add(2, checked_mul(labels, stages));
  size.edges = checked_add(checked_mul(2, labels),
                           checked_mul(per_step, stages - 1));
  return size;
}

LayeredPriceGraph::LayeredPriceGraph(const Scenario& s, Objective objective)
    : scenario_(&s), objective_(objective) {
  require_valid(s);
  if (objective == Objective::match_supply && !s.supply) {
    throw ValidationError("match_supply objective requires supply");
  }
  if (s.max_deadline < 2) {
    throw ValidationError("layered graph needs at least 2 price levels");
  }
  if (s.horizon < s.max_deadline) {
    throw ValidationError("layered graph needs horizon >= max deadline");
  }
  stages_ = s.horizon - s.max_deadline + 2;
  labels_ = checked_pow(static_cast<std::uint64_t>(s.max_deadline),
                        s.max_deadline - 1);
  arrivals_by_period_.resize(static_cast<std::size_t>(s.horizon) + 1);
  for (const Job& j : s.jobs) {
    arrivals_by_period_[static_cast<std::size_t>(j.arrival)].push_back(
        WindowArrival{j.deadline_class - 1, j.demand});
  }
}

std::uint64_t LayeredPriceGraph::vertex_count() const {
  std::uint64_t count = 2;
  for (int stage = 1; stage <= stages_; ++stage) count += labels_;
  return count;
}

std::uint64_t LayeredPriceGraph::edge_count() const {
  const int n = scenario_->max_deadline;
  std::uint64_t count = labels_;  // source fan-out
  for (int stage = 1; stage < stages_; ++stage) {
    for (std::uint64_t r = 0; r < labels_; ++r) {
      for (int z = 1; z <= n; ++z) {
        const std::uint64_t v = successor(r, z);
        assert(v < labels_);
        (void)v;
        ++count;
      }
    }
  }
  count += labels_;  // fan-in to destination
  return count;
}

std::vector<int> LayeredPriceGraph::label(std::uint64_t rank) const {
  const int n = scenario_->max_deadline;
  std::vector<int> out(static_cast<std::size_t>(n - 1));
  for (int i = n - 2; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<int>(rank % static_cast<std::uint64_t>(n)) + 1;
    rank /= static_cast<std::uint64_t>(n);
  }
  return out;
}

std::uint64_t LayeredPriceGraph::rank_of(const std::vector<int>& label) const {
  const int n = scenario_->max_deadline;
  assert(static_cast<int>(label.size()) == n - 1);
  std::uint64_t rank = 0;
  for (int entry : label) {
    assert(entry >= 1 && entry <= n);
    rank = rank * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(entry - 1);
  }
  return rank;
}

std::uint64_t LayeredPriceGraph::successor(std::uint64_t rank,
                                           int next_index) const {
  const std::uint64_t n = static_cast<std::uint64_t>(scenario_->max_deadline);
  std::uint64_t head = labels_ / n;  // N^(N-2)
  return (rank % head) * n + static_cast<std::uint64_t>(next_index - 1);
}

double LayeredPriceGraph::source_weight_label(
    const std::vector<int>& label) const {
  const int n = scenario_->max_deadline;
  DemandBuckets buckets(n);
  double aggregate = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    for (const WindowArrival& a :
         arrivals_by_period_[static_cast<std::size_t>(k)]) {
      buckets.add(a.slot, a.demand);
    }
    const double u = buckets.consume(label[static_cast<std::size_t>(k - 1)]);
    buckets.shift();
    if (objective_ == Objective::peak_min) {
      aggregate = std::max(aggregate, u);
    } else {
      const double gap = u - (*scenario_->supply)[static_cast<std::size_t>(k - 1)];
      aggregate += gap * gap;
    }
  }
  return aggregate;
}

double LayeredPriceGraph::source_weight(std::uint64_t rank) const {
  return source_weight_label(label(rank));
}

double LayeredPriceGraph::step_weight_prices(
    int stage, const std::vector<int>& prices) const {
  const int n = scenario_->max_deadline;
  assert(static_cast<int>(prices.size()) == n);
  assert(stage >= 1 && stage < stages_);
  DemandBuckets buckets(n);
  double u = 0.0;
  for (int o = 0; o < n; ++o) {
    const int period = stage + o;
    for (const WindowArrival& a :
         arrivals_by_period_[static_cast<std::size_t>(period)]) {
      buckets.add(a.slot, a.demand);
    }
    u = buckets.consume(prices[static_cast<std::size_t>(o)]);
    buckets.shift();
  }
  if (objective_ == Objective::peak_min) return u;
  const int period = stage + n - 1;
  const double gap = u - (*scenario_->supply)[static_cast<std::size_t>(period - 1)];
  return gap * gap;
}

double LayeredPriceGraph::step_weight(int stage, std::uint64_t rank,
                                      int next_index) const {
  std::vector<int> prices = label(rank);
  prices.push_back(next_index);
  return step_weight_prices(stage, prices);
}

namespace {

struct SearchOutput {
  std::vector<int> schedule;
  double value = 0.0;
};

/// Dijkstra over the implicit graph plus a backward pass that recovers the
/// lexicographically smallest optimal schedule. `bottleneck` selects the
/// max aggregation, otherwise weights add.
SearchOutput search_graph(const LayeredPriceGraph& graph, bool bottleneck) {
  const int n = graph.scenario().max_deadline;
  const int stages = graph.stages();
  const std::uint64_t labels = graph.labels_per_stage();
  const double inf = std::numeric_limits<double>::infinity();
  const auto combine = [bottleneck](double a, double b) {
    return bottleneck ? std::max(a, b) : a + b;
  };

  const std::uint64_t vertex_total = labels * static_cast<std::uint64_t>(stages);
  const std::uint64_t dest = vertex_total;
  std::vector<double> dist(static_cast<std::size_t>(vertex_total) + 1, inf);
  std::vector<char> settled(static_cast<std::size_t>(vertex_total) + 1, 0);

  using Entry = std::pair<double, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;

  for (std::uint64_t r = 0; r < labels; ++r) {
    const double w = graph.source_weight(r);
    dist[static_cast<std::size_t>(r)] = w;
    queue.emplace(w, r);
  }

  std::vector<int> prices(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (settled[static_cast<std::size_t>(node)]) continue;
    settled[static_cast<std::size_t>(node)] = 1;
    if (node == dest) break;
    const int stage = static_cast<int>(node / labels) + 1;
    const std::uint64_t rank = node % labels;
    if (stage == stages) {
      if (d < dist[static_cast<std::size_t>(dest)]) {
        dist[static_cast<std::size_t>(dest)] = d;
        queue.emplace(d, dest);
      }
      continue;
    }
    const std::vector<int> head = graph.label(rank);
    std::copy(head.begin(), head.end(), prices.begin());
    for (int z = 1; z <= n; ++z) {
      prices[static_cast<std::size_t>(n - 1)] = z;
      const double w = graph.step_weight_prices(stage, prices);
      const double nd = combine(d, w);
      const std::uint64_t next =
          static_cast<std::uint64_t>(stage) * labels + graph.successor(rank, z);
      if (nd < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = nd;
        queue.emplace(nd, next);
      }
    }
  }

  // Backward sweep: suffix[s][r] is the optimal completion value from stage s
  // vertex r to the destination, right-folded so the forward walk can test
  // equality against identically computed doubles.
  std::vector<std::vector<double>> suffix(
      static_cast<std::size_t>(stages),
      std::vector<double>(static_cast<std::size_t>(labels), 0.0));
  for (int stage = stages - 1; stage >= 1; --stage) {
    auto& row = suffix[static_cast<std::size_t>(stage - 1)];
    const auto& next_row = suffix[static_cast<std::size_t>(stage)];
    for (std::uint64_t r = 0; r < labels; ++r) {
      const std::vector<int> head = graph.label(r);
      std::copy(head.begin(), head.end(), prices.begin());
      double best = inf;
      for (int z = 1; z <= n; ++z) {
        prices[static_cast<std::size_t>(n - 1)] = z;
        const double w = graph.step_weight_prices(stage, prices);
        const double cand =
            combine(w, next_row[static_cast<std::size_t>(graph.successor(r, z))]);
        best = std::min(best, cand);
      }
      row[static_cast<std::size_t>(r)] = best;
    }
  }

  double total = inf;
  std::uint64_t start_rank = 0;
  for (std::uint64_t r = 0; r < labels; ++r) {
    const double cand =
        combine(graph.source_weight(r), suffix[0][static_cast<std::size_t>(r)]);
    if (cand < total) {
      total = cand;
      start_rank = r;
    }
  }

  SearchOutput out;
  out.value = dist[static_cast<std::size_t>(dest)];
  out.schedule = graph.label(start_rank);
  std::uint64_t cur = start_rank;
  double prefix_max = graph.source_weight(start_rank);
  for (int stage = 1; stage < stages; ++stage) {
    const std::vector<int> head = graph.label(cur);
    std::copy(head.begin(), head.end(), prices.begin());
    const auto& next_row = suffix[static_cast<std::size_t>(stage)];
    int chosen = 0;
    double chosen_w = 0.0;
    for (int z = 1; z <= n; ++z) {
      prices[static_cast<std::size_t>(n - 1)] = z;
      const double w = graph.step_weight_prices(stage, prices);
      const double tail =
          next_row[static_cast<std::size_t>(graph.successor(cur, z))];
      const bool keeps_optimum =
          bottleneck
              ? std::max(prefix_max, combine(w, tail)) == total
              : combine(w, tail) ==
                    suffix[static_cast<std::size_t>(stage - 1)]
                          [static_cast<std::size_t>(cur)];
      if (keeps_optimum) {
        chosen = z;
        chosen_w = w;
        break;
      }
    }
    assert(chosen != 0);
    out.schedule.push_back(chosen);
    prefix_max = std::max(prefix_max, chosen_w);
    cur = graph.successor(cur, chosen);
  }
  return out;
}

SolveResult dijkstra_common(const Scenario& s, Objective objective,
                            std::uint64_t budget, const char* method) {
  const auto start = Clock::now();
  require_valid(s);
  if (objective == Objective::match_supply && !s.supply) {
    throw ValidationError("match_supply objective requires supply");
  }

  if (s.max_deadline == 1) {
    SolveResult result;
    result.schedule = PriceSchedule::constant(1, s.horizon);
    result.objective_value = evaluate(s, result.schedule, objective);
    result.method = std::string(method) + "(direct)";
    result.elapsed_ms = ms_since(start);
    return result;
  }
  if (s.horizon < s.max_deadline) {
    SolveResult result = brute_force(s, objective, budget);
    result.method = std::string(method) + "(brute-force fallback)";
    return result;
  }

  const GraphSize size = graph_size(s.max_deadline, s.horizon);
  const std::uint64_t work = checked_add(size.vertices, size.edges);
  if (work > budget) {
    std::ostringstream os;
    os << "graph work " << size.vertices << " vertices + " << size.edges
       << " edges exceeds budget " << budget;
    throw BudgetError(os.str());
  }

  LayeredPriceGraph graph(s, objective);
  SearchOutput found = search_graph(graph, objective == Objective::peak_min);

  SolveResult result;
  result.schedule.indices = std::move(found.schedule);
  result.objective_value = evaluate(s, result.schedule, objective);
  result.method = method;
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace

SolveResult minimax_dijkstra(const Scenario& s, std::uint64_t budget) {
  return dijkstra_common(s, Objective::peak_min, budget, "dijkstra");
}

SolveResult mse_dijkstra(const Scenario& s, std::uint64_t budget) {
  return dijkstra_common(s, Objective::match_supply, budget, "dijkstra");
}

}  // namespace gridprice
