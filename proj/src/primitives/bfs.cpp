#include "fgraph/primitives/bfs.hpp"

#include <memory>

#include "fgraph/operators.hpp"

namespace fgraph {

namespace {

// Non-idempotent discovery: the CAS on the label admits one winner per vertex.
struct DiscoverOnce {
  std::vector<std::int32_t>& labels;
  std::vector<vertex_t>& preds;
  std::int32_t next_depth;

  bool cond_edge(vertex_t, vertex_t d, edge_t) {
    return compare_and_swap(labels[static_cast<std::size_t>(d)], kInfDepth, next_depth);
  }
  void apply_edge(vertex_t s, vertex_t d, edge_t) { atomic_store(preds[static_cast<std::size_t>(d)], s); }
};

// Idempotent discovery: racing writers store the same depth, so no atomics
// beyond plain relaxed loads/stores are needed.
struct DiscoverIdempotent {
  std::vector<std::int32_t>& labels;
  std::vector<vertex_t>& preds;
  std::int32_t next_depth;

  bool cond_edge(vertex_t, vertex_t d, edge_t) { return atomic_load(labels[static_cast<std::size_t>(d)]) == kInfDepth; }
  void apply_edge(vertex_t s, vertex_t d, edge_t) {
    atomic_store(labels[static_cast<std::size_t>(d)], next_depth);
    atomic_store(preds[static_cast<std::size_t>(d)], s);
  }
};

// Pull steps: each candidate is owned by exactly one worker.
struct DiscoverPull {
  std::vector<std::int32_t>& labels;
  std::vector<vertex_t>& preds;
  std::int32_t next_depth;

  bool cond_edge(vertex_t, vertex_t u, edge_t) { return labels[static_cast<std::size_t>(u)] == kInfDepth; }
  void apply_edge(vertex_t p, vertex_t u, edge_t) {
    labels[static_cast<std::size_t>(u)] = next_depth;
    preds[static_cast<std::size_t>(u)] = p;
  }
};

}  // namespace

BfsResult bfs(const CsrGraph& g, vertex_t source, const BfsOptions& options) {
  const vertex_t n = g.num_vertices();
  if (source < 0 || source >= n) throw UsageError("bfs source " + std::to_string(source) + " out of range");

  BfsResult result;
  auto& labels = result.labels;
  auto& preds = result.preds;
  labels.assign(static_cast<std::size_t>(n), kInfDepth);
  preds.assign(static_cast<std::size_t>(n), kNoVertex);
  labels[static_cast<std::size_t>(source)] = 0;
  preds[static_cast<std::size_t>(source)] = source;

  std::unique_ptr<CsrGraph> owned_incoming;
  const CsrGraph* incoming = options.incoming;
  if (!incoming && options.direction != Direction::Push) {
    if (g.is_symmetric()) {
      incoming = &g;
    } else {
      owned_incoming = std::make_unique<CsrGraph>(transpose(g));
      incoming = owned_incoming.get();
    }
  }

  Workspace ws(n);
  std::unique_ptr<CullingState> culling;
  if (options.idempotent) {
    culling = std::make_unique<CullingState>(n);
    culling->remember(Frontier::vertices({source}));
  }

  AdvanceConfig push_cfg;
  push_cfg.idempotent = options.idempotent;
  push_cfg.load_balance = options.load_balance;

  // Pull state is rebuilt from the labels whenever a pull run starts.
  bool pull_ready = false;
  VisitedBitmap visited;
  std::vector<item_t> unvisited;

  Frontier frontier = Frontier::vertices({source});
  std::size_t visited_count = 1;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    ++ws.stats.iterations;
    const std::size_t remaining = static_cast<std::size_t>(n) - visited_count;
    const Direction direction = decide_direction(frontier.size(), remaining, options.direction);
    result.directions.push_back(direction);
    Frontier next;

    if (direction == Direction::Pull) {
      if (!pull_ready) {
        visited = VisitedBitmap(n);
        unvisited.clear();
        for (vertex_t v = 0; v < n; ++v) {
          if (labels[static_cast<std::size_t>(v)] != kInfDepth) {
            visited.test_and_set(v);
          } else {
            unvisited.push_back(v);
          }
        }
        pull_ready = true;
      }
      DiscoverPull fs{labels, preds, depth + 1};
      next = pull_advance(*incoming, visited, fs, ws, &unvisited);
      compute(next, [&](item_t v) { visited.test_and_set(static_cast<vertex_t>(v)); });
      auto still_unvisited = vertex_functors([&](vertex_t v) { return labels[static_cast<std::size_t>(v)] == kInfDepth; });
      unvisited = filter(g, Frontier::vertices(std::move(unvisited)), still_unvisited).items;
      if (culling) culling->remember(next);
      visited_count += next.size();
    } else {
      pull_ready = false;
      if (options.idempotent) {
        DiscoverIdempotent fs{labels, preds, depth + 1};
        next = advance(g, frontier, fs, push_cfg, ws);
        next = idempotent_dedupe(next, *culling);
        culling->remember(next);
        visited_count = culling->history.set_count();
      } else {
        DiscoverOnce fs{labels, preds, depth + 1};
        next = advance(g, frontier, fs, push_cfg, ws);
        visited_count += next.size();
      }
    }
    next.generation = frontier.generation + 1;
    frontier = std::move(next);
    ++depth;
  }
  result.stats = ws.stats;
  return result;
}

}  // namespace fgraph
