#pragma once

#include <cstddef>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/load_balance.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

struct PagerankOptions {
  double damping = 0.85;
  double epsilon = 1e-6;
  std::size_t max_iters = 1000;
  LoadBalanceOptions load_balance{};
};

struct PagerankResult {
  std::vector<double> rank;
  std::size_t iterations = 0;
  std::vector<double> mass_history;  // sum of ranks after each iteration
  TraversalStats stats;
};

// Throws UsageError unless 0 < damping < 1 and epsilon > 0. Rank mass of
// vertices without out-edges is spread uniformly over all vertices.
PagerankResult pagerank(const CsrGraph& g, const PagerankOptions& options = {});

}  // namespace fgraph
