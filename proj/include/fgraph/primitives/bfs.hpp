#pragma once

#include <cstdint>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/load_balance.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

struct BfsOptions {
  Direction direction = Direction::Push;
  bool idempotent = false;
  LoadBalanceOptions load_balance{};
  // Incoming adjacency for pull steps on directed graphs. When null and the
  // graph is not symmetric, bfs builds one itself.
  const CsrGraph* incoming = nullptr;
};

struct BfsResult {
  std::vector<std::int32_t> labels;  // hop distance, kInfDepth when unreached
  std::vector<vertex_t> preds;       // kNoVertex when unreached; the source is its own predecessor
  std::vector<Direction> directions; // direction taken by each iteration
  TraversalStats stats;
};

BfsResult bfs(const CsrGraph& g, vertex_t source, const BfsOptions& options = {});

}  // namespace fgraph
