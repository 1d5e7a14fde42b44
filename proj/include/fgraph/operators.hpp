#pragma once

#include <omp.h>
#include <optional>
#include <vector>

#include "fgraph/frontier.hpp"
#include "fgraph/functors.hpp"
#include "fgraph/graph.hpp"
#include "fgraph/load_balance.hpp"
#include "fgraph/optimizations.hpp"
#include "fgraph/parallel.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

struct AdvanceConfig {
  FrontierKind input_kind = FrontierKind::Vertex;
  FrontierKind output_kind = FrontierKind::Vertex;
  // Non-idempotent advances emit each output vertex at most once per call.
  bool idempotent = false;
  Direction direction = Direction::Push;
  LoadBalanceOptions load_balance{};
  // Run the functors for their effects only; the returned frontier is empty.
  bool discard_output = false;

  // Pull inputs. `incoming` defaults to the graph itself, which is only
  // correct for symmetric graphs. Auto stays Push without `unvisited_count`.
  const CsrGraph* incoming = nullptr;
  const std::vector<item_t>* pull_candidates = nullptr;
  std::optional<std::size_t> unvisited_count;
};

/// Visits the neighbor lists of every frontier element. For each edge (s, d, e)
/// with cond_edge true, apply_edge runs inside the same traversal pass and d
/// (or e, for edge output) joins the returned frontier. Work distribution
/// follows the configured load-balance strategy. Edge-frontier inputs expand
/// from each edge's destination.
template <EdgeFunctor F>
Frontier advance(const CsrGraph& g, const Frontier& in, F& fs, const AdvanceConfig& cfg, Workspace& ws) {
  if (in.kind != cfg.input_kind) {
    throw UsageError(std::string("advance expected a ") + to_string(cfg.input_kind) + " frontier, got " +
                     to_string(in.kind));
  }
  ++ws.stats.advance_calls;

  Direction direction = cfg.direction;
  if (direction == Direction::Auto) {
    direction = cfg.unvisited_count ? decide_direction(in.size(), *cfg.unvisited_count, Direction::Auto)
                                    : Direction::Push;
  }
  if (direction == Direction::Pull) {
    if (in.kind != FrontierKind::Vertex || cfg.output_kind != FrontierKind::Vertex) {
      throw UsageError("pull advance supports vertex-to-vertex frontiers only");
    }
    const CsrGraph& incoming = cfg.incoming ? *cfg.incoming : g;
    VisitedBitmap bits = frontier_to_bitmap(in, g.num_vertices());
    Frontier out = pull_advance(incoming, bits, fs, ws, cfg.pull_candidates);
    out.generation = in.generation + 1;
    if (cfg.discard_output) out.items.clear();
    return out;
  }

  const Strategy strategy = resolve_strategy(in, g, cfg.load_balance);
  auto& buffers = ws.buffers();
  const bool edge_output = cfg.output_kind == FrontierKind::Edge;
  const bool unique_vertices = !cfg.idempotent && !edge_output;
  const std::uint32_t round = unique_vertices ? ws.next_claim_round() : 0;
  const bool discard = cfg.discard_output;

  const edge_t visited = for_each_frontier_edge(g, in, strategy, [&](int worker, std::size_t, vertex_t s,
                                                                     vertex_t d, edge_t e) {
    if (!fs.cond_edge(s, d, e)) return;
    fs.apply_edge(s, d, e);
    if (discard) return;
    if (edge_output) {
      buffers[static_cast<std::size_t>(worker)].push_back(e);
    } else if (!unique_vertices || ws.claim(d, round)) {
      buffers[static_cast<std::size_t>(worker)].push_back(d);
    }
  });
  ws.stats.edges_inspected += static_cast<std::uint64_t>(visited);
  return Frontier{cfg.output_kind, concat_buffers(buffers), in.generation + 1};
}

// Convenience overload with a throwaway workspace.
template <EdgeFunctor F>
Frontier advance(const CsrGraph& g, const Frontier& in, F& fs, const AdvanceConfig& cfg = {}) {
  Workspace ws(g.num_vertices());
  return advance(g, in, fs, cfg, ws);
}

/// Keeps the elements whose cond functor holds and runs the apply functor
/// once on each survivor. Survivors keep their relative input order.
template <class F>
Frontier filter(const CsrGraph& g, const Frontier& in, F& fs) {
  const int workers = worker_count();
  std::vector<std::vector<item_t>> buffers(static_cast<std::size_t>(workers));
  const std::size_t n = in.size();
  const bool edges = in.kind == FrontierKind::Edge;
  if constexpr (!EdgeFunctor<F>) {
    if (edges) throw UsageError("filtering an edge frontier needs cond_edge/apply_edge");
  }
  if constexpr (!VertexFunctor<F>) {
    if (!edges) throw UsageError("filtering a vertex frontier needs cond_vertex/apply_vertex");
  }
#pragma omp parallel num_threads(workers)
  {
    const int w = omp_get_thread_num();
    auto [lo, hi] = block_range(n, omp_get_num_threads(), w);
    auto& out = buffers[static_cast<std::size_t>(w)];
    for (std::size_t i = lo; i < hi; ++i) {
      const item_t item = in.items[i];
      if (edges) {
        if constexpr (EdgeFunctor<F>) {
          const vertex_t s = g.edge_source(item);
          const vertex_t d = g.edge_dest(item);
          if (fs.cond_edge(s, d, item)) {
            fs.apply_edge(s, d, item);
            out.push_back(item);
          }
        }
      } else {
        if constexpr (VertexFunctor<F>) {
          const auto v = static_cast<vertex_t>(item);
          if (fs.cond_vertex(v)) {
            fs.apply_vertex(v);
            out.push_back(item);
          }
        }
      }
    }
  }
  return Frontier{in.kind, concat_buffers(buffers), in.generation};
}

/// Runs `apply(item)` exactly once per frontier element; the frontier is unchanged.
template <class Apply>
void compute(const Frontier& f, Apply&& apply) {
  const auto n = static_cast<long>(f.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) apply(f.items[static_cast<std::size_t>(i)]);
}

}  // namespace fgraph
