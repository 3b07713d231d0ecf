#pragma once

#include <cstdint>
#include <vector>

#include "gridprice/heuristics.hpp"
#include "gridprice/model.hpp"
#include "gridprice/window_search.hpp"

namespace gridprice {

struct GraphSize {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

/// Closed-form size of the layered price graph:
///   vertices = 2 + N^(N-1) * (K - N + 2)
///   edges    = 2 * N^(N-1) + N^N * (K - N + 1)
/// Requires K >= N >= 2; throws std::overflow_error when a count does not fit
/// in 64 bits (that alone justifies never materializing the graph).
GraphSize graph_size(int max_deadline, int horizon);

/// Layered graph over price windows. Stage i holds one vertex per
/// (N-1)-tuple of ladder indices, the prices of periods [i, i+N-2]; an edge
/// u -> v exists exactly when the tuples overlap on N-2 entries, i.e. v
/// extends u's window one period to the right. Vertices are addressed by the
/// rank of their tuple (lexicographic, first entry most significant), so
/// adjacency is generated on the fly and nothing is materialized.
class LayeredPriceGraph {
 public:
  LayeredPriceGraph(const Scenario& s, Objective objective);

  int stages() const { return stages_; }
  std::uint64_t labels_per_stage() const { return labels_; }
  /// Structural counts, walked vertex by vertex (tests pin them against
  /// graph_size); intended for desk-scale instances.
  std::uint64_t vertex_count() const;
  std::uint64_t edge_count() const;

  std::vector<int> label(std::uint64_t rank) const;
  std::uint64_t rank_of(const std::vector<int>& label) const;
  /// Vertex of the next stage reached by posting `next_index`.
  std::uint64_t successor(std::uint64_t rank, int next_index) const;

  /// Weight of source -> stage-1 vertex: the objective aggregate (max of u,
  /// or summed squared error) over periods [1, N-1] under the label prices.
  double source_weight_label(const std::vector<int>& label) const;
  double source_weight(std::uint64_t rank) const;
  /// Weight of the stage -> stage+1 edge that appends price `prices[N-1]`:
  /// the contribution of period stage+N-1 (consumption, or squared error)
  /// under the N window prices. `prices` covers periods [stage, stage+N-1].
  double step_weight_prices(int stage, const std::vector<int>& prices) const;
  double step_weight(int stage, std::uint64_t rank, int next_index) const;

  const Scenario& scenario() const { return *scenario_; }
  Objective objective() const { return objective_; }

 private:
  const Scenario* scenario_;
  Objective objective_;
  int stages_;
  std::uint64_t labels_;
  std::vector<std::vector<WindowArrival>> arrivals_by_period_;
};

/// Exact peak minimization: Dijkstra over the layered graph with the
/// bottleneck relaxation d(v) = max(d(u), w(u, v)). Ties among optimal
/// schedules resolve to the highest-price (lexicographically smallest index)
/// schedule, matching the heuristics. Falls back to brute_force when K < N
/// and to direct evaluation when N = 1; refuses (BudgetError) when the graph
/// work (vertices + edges) or the fallback enumeration exceeds `budget`.
SolveResult minimax_dijkstra(const Scenario& s,
                             std::uint64_t budget = kDefaultEnumerationBudget);

/// Exact supply matching: standard shortest path over squared-error weights;
/// the path sum divided by K is the minimal mean squared error. Same
/// fallbacks, budget, and tie-break as minimax_dijkstra.
SolveResult mse_dijkstra(const Scenario& s,
                         std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace gridprice
