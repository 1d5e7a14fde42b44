#pragma once

#include <cstddef>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

struct CcResult {
  std::vector<vertex_t> component;  // smallest vertex id of each component
  std::size_t num_components = 0;
  std::size_t hook_rounds = 0;
  std::size_t jump_passes = 0;
  TraversalStats stats;
};

// Edge directions are ignored: the result is the weakly connected components.
CcResult connected_components(const CsrGraph& g);

}  // namespace fgraph
