#include "fgraph/primitives/sssp.hpp"

#include "fgraph/operators.hpp"

namespace fgraph {

namespace {

struct UpdateLabel {
  const CsrGraph& g;
  std::vector<distance_t>& labels;
  std::vector<vertex_t>& preds;
  std::vector<std::uint32_t>& stamps;
  std::uint32_t stamp;

  bool cond_edge(vertex_t s, vertex_t d, edge_t e) {
    const distance_t candidate = atomic_load(labels[static_cast<std::size_t>(s)]) + g.edge_weight(e);
    return candidate < atomic_min(labels[static_cast<std::size_t>(d)], candidate);
  }
  // SetPred
  void apply_edge(vertex_t s, vertex_t d, edge_t) {
    atomic_store(preds[static_cast<std::size_t>(d)], s);
    atomic_store(stamps[static_cast<std::size_t>(d)], stamp);
  }
};

// Keeps a vertex iff it carries the current output-queue stamp; the first
// copy consumes the stamp so later duplicates fall out.
struct RemoveRedundant {
  std::vector<std::uint32_t>& stamps;
  std::uint32_t stamp;

  bool cond_vertex(vertex_t v) { return compare_and_swap(stamps[static_cast<std::size_t>(v)], stamp, stamp + 1); }
  void apply_vertex(vertex_t) {}
};

}  // namespace

distance_t default_delta(const CsrGraph& g) {
  if (!g.has_weights() || g.num_edges() == 0) return 1;
  long double total = 0;
  for (weight_t w : g.edge_weights()) total += static_cast<long double>(w);
  const auto mean = total / static_cast<long double>(g.num_edges());
  const auto rounded = static_cast<distance_t>(mean);
  return std::max<distance_t>(1, static_cast<long double>(rounded) < mean ? rounded + 1 : rounded);
}

SsspResult sssp(const CsrGraph& g, vertex_t source, const SsspOptions& options) {
  const vertex_t n = g.num_vertices();
  if (source < 0 || source >= n) throw UsageError("sssp source " + std::to_string(source) + " out of range");
  if (!g.has_weights()) throw UsageError("sssp needs edge weights");
  if (options.delta < 0) throw UsageError("sssp delta must be positive");

  SsspResult result;
  result.delta = options.delta == 0 ? default_delta(g) : options.delta;
  result.labels.assign(static_cast<std::size_t>(n), kInfDistance);
  result.preds.assign(static_cast<std::size_t>(n), kNoVertex);
  result.queue_stamps.assign(static_cast<std::size_t>(n), 0);
  result.labels[static_cast<std::size_t>(source)] = 0;
  result.preds[static_cast<std::size_t>(source)] = source;

  Workspace ws(n);
  AdvanceConfig cfg;
  cfg.idempotent = true;  // duplicates are removed by the stamp filter
  cfg.load_balance = options.load_balance;

  NearFarQueue queue;
  queue.delta = result.delta;
  queue.near = Frontier::vertices({source});
  std::uint32_t iteration = 0;
  while (true) {
    if (queue.near.empty()) {
      if (queue.far.empty()) break;
      queue = advance_level(std::move(queue), result.labels);
      continue;
    }
    ++iteration;
    ++ws.stats.iterations;
    const std::uint32_t stamp = 2 * iteration - 1;

    UpdateLabel relax{g, result.labels, result.preds, result.queue_stamps, stamp};
    Frontier out = advance(g, queue.near, relax, cfg, ws);
    RemoveRedundant dedupe{result.queue_stamps, stamp};
    out = filter(g, out, dedupe);

    auto [near, far] = split_near_far(out, result.labels, queue.delta, queue.level);
    queue.near = std::move(near);
    queue.far.items.insert(queue.far.items.end(), far.items.begin(), far.items.end());
  }
  result.stats = ws.stats;
  return result;
}

}  // namespace fgraph
