#include "fgraph/primitives/bc.hpp"

#include <algorithm>
#include <numeric>

#include "fgraph/operators.hpp"

namespace fgraph {

namespace {

struct ForwardSigma {
  std::vector<std::int32_t>& depth;
  std::vector<double>& sigma;
  std::int32_t next_depth;

  bool cond_edge(vertex_t s, vertex_t d, edge_t) {
    auto& slot = depth[static_cast<std::size_t>(d)];
    const bool discovered = compare_and_swap(slot, kInfDepth, next_depth);
    if (discovered || atomic_load(slot) == next_depth) {
      atomic_add(sigma[static_cast<std::size_t>(d)], sigma[static_cast<std::size_t>(s)]);
    }
    return discovered;
  }
  void apply_edge(vertex_t, vertex_t, edge_t) {}
};

// Each source vertex s is owned by one worker under per-element balancing,
// so dependency[s] has a single writer.
struct BackwardDependency {
  const std::vector<std::int32_t>& depth;
  const std::vector<double>& sigma;
  std::vector<double>& dependency;

  bool cond_edge(vertex_t s, vertex_t d, edge_t) {
    return depth[static_cast<std::size_t>(d)] == depth[static_cast<std::size_t>(s)] + 1;
  }
  void apply_edge(vertex_t s, vertex_t d, edge_t) {
    const auto si = static_cast<std::size_t>(s);
    const auto di = static_cast<std::size_t>(d);
    dependency[si] += sigma[si] / sigma[di] * (1.0 + dependency[di]);
  }
};

}  // namespace

void bc_from_source(const CsrGraph& g, vertex_t source, BcProblem& problem, const BcOptions& options) {
  const vertex_t n = g.num_vertices();
  if (source < 0 || source >= n) throw UsageError("bc source " + std::to_string(source) + " out of range");
  const auto un = static_cast<std::size_t>(n);
  problem.sigma.assign(un, 0.0);
  problem.depth.assign(un, kInfDepth);
  problem.dependency.assign(un, 0.0);
  if (problem.bc.size() != un) problem.bc.assign(un, 0.0);
  problem.sigma[static_cast<std::size_t>(source)] = 1.0;
  problem.depth[static_cast<std::size_t>(source)] = 0;

  Workspace ws(n);
  AdvanceConfig forward;
  forward.load_balance = options.load_balance;

  std::vector<Frontier> levels;
  levels.push_back(Frontier::vertices({source}));
  std::int32_t d = 0;
  while (!levels.back().empty()) {
    ++ws.stats.iterations;
    ForwardSigma fs{problem.depth, problem.sigma, d + 1};
    Frontier next = advance(g, levels.back(), fs, forward, ws);
    levels.push_back(std::move(next));
    ++d;
  }
  levels.pop_back();

  AdvanceConfig backward;
  backward.load_balance.kind = StrategyKind::PerElement;
  backward.discard_output = true;
  BackwardDependency bs{problem.depth, problem.sigma, problem.dependency};
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    ++ws.stats.iterations;
    advance(g, *it, bs, backward, ws);
  }

  problem.dependency[static_cast<std::size_t>(source)] = 0.0;
  compute(Frontier::all_vertices(n), [&](item_t v) {
    problem.bc[static_cast<std::size_t>(v)] += problem.dependency[static_cast<std::size_t>(v)];
  });
  problem.stats += ws.stats;
}

BcProblem betweenness(const CsrGraph& g, const std::vector<vertex_t>& sources, const BcOptions& options) {
  BcProblem problem;
  problem.bc.assign(static_cast<std::size_t>(g.num_vertices()), 0.0);
  for (vertex_t s : sources) bc_from_source(g, s, problem, options);
  if (g.is_symmetric()) {
    for (double& x : problem.bc) x *= 0.5;
  }
  return problem;
}

BcProblem betweenness_all(const CsrGraph& g, const BcOptions& options) {
  std::vector<vertex_t> sources(static_cast<std::size_t>(g.num_vertices()));
  std::iota(sources.begin(), sources.end(), 0);
  return betweenness(g, sources, options);
}

}  // namespace fgraph
