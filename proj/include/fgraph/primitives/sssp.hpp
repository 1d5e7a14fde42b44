#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/load_balance.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

// A delta this large keeps every vertex in the near slice.
inline constexpr distance_t kInfiniteDelta = std::numeric_limits<distance_t>::max();

struct SsspOptions {
  distance_t delta = 0;  // 0 selects default_delta(g)
  LoadBalanceOptions load_balance{};
};

struct SsspResult {
  std::vector<distance_t> labels;           // kInfDistance when unreached
  std::vector<vertex_t> preds;              // source is its own predecessor
  std::vector<std::uint32_t> queue_stamps;  // output-queue stamp of each vertex's last relaxation
  distance_t delta = 0;
  TraversalStats stats;
};

// ceil(mean edge weight), at least 1.
distance_t default_delta(const CsrGraph& g);

// Label-correcting SSSP: advance relaxes with atomic-min, a stamp-based filter
// drops redundant entries, and a near/far split orders work by distance band.
// Throws UsageError when the graph has no weights.
SsspResult sssp(const CsrGraph& g, vertex_t source, const SsspOptions& options = {});

}  // namespace fgraph
