#pragma once

#include <cstdint>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/load_balance.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

struct BcOptions {
  LoadBalanceOptions load_balance{};  // forward pass only
};

// Per-run state; bc accumulates across sources.
struct BcProblem {
  std::vector<double> sigma;
  std::vector<std::int32_t> depth;
  std::vector<double> dependency;
  std::vector<double> bc;
  TraversalStats stats;
};

// Adds the dependency contributions of one source into problem.bc (not halved).
void bc_from_source(const CsrGraph& g, vertex_t source, BcProblem& problem, const BcOptions& options = {});

// Betweenness over the given sources using hop-count shortest paths.
// Symmetric graphs are halved so each unordered pair counts once.
BcProblem betweenness(const CsrGraph& g, const std::vector<vertex_t>& sources, const BcOptions& options = {});
BcProblem betweenness_all(const CsrGraph& g, const BcOptions& options = {});

}  // namespace fgraph
