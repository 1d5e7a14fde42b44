#pragma once

#include <algorithm>
#include <omp.h>
#include <string>
#include <variant>
#include <vector>

#include "fgraph/frontier.hpp"
#include "fgraph/graph.hpp"

namespace fgraph {

// One frontier element's neighbor list per work item.
struct PerElement {
  friend bool operator==(const PerElement&, const PerElement&) = default;
};

// Lists bucketed by length; large lists are shared by all workers, medium
// lists go whole to one worker, small lists are spread statically. Bounds
// are inclusive: degree <= small_max is small, degree <= medium_max medium.
struct SizeClassGrouping {
  edge_t small_max = 32;
  edge_t medium_max = 256;
  friend bool operator==(const SizeClassGrouping&, const SizeClassGrouping&) = default;
};

enum class Granularity { Node, Edge };

// Equal-length edge chunks located by scan + sorted search. With Node
// granularity chunk boundaries snap back to the start of the owning list.
struct BalancedPartition {
  edge_t chunk_size = 256;
  Granularity granularity = Granularity::Edge;
  friend bool operator==(const BalancedPartition&, const BalancedPartition&) = default;
};

using Strategy = std::variant<PerElement, SizeClassGrouping, BalancedPartition>;

enum class StrategyKind { Auto, PerElement, SizeClass, Balanced };

struct LoadBalanceOptions {
  StrategyKind kind = StrategyKind::Auto;
  edge_t small_max = 32;
  edge_t medium_max = 256;
  edge_t chunk_size = 256;
  std::size_t threshold = 4096;  // frontier size switching node- to edge-granularity chunks
};

StrategyKind parse_strategy_kind(const std::string& name);
const char* to_string(StrategyKind kind);
std::string describe(const Strategy& strategy);

// SizeClassGrouping when the graph's max degree fits the medium class,
// otherwise BalancedPartition whose granularity depends on frontier size.
Strategy select_strategy(const Frontier& f, const CsrGraph& g, const LoadBalanceOptions& options = {});

// Honours a fixed `options.kind`; defers to select_strategy for Auto.
Strategy resolve_strategy(const Frontier& f, const CsrGraph& g, const LoadBalanceOptions& options);

/// Chunked assignment of a frontier's edges to workers.
///
/// Chunk `i` covers global edge offsets [chunk_starts[i], chunk_end(i)) of the
/// concatenated frontier neighbor lists. `degree_prefix` has |f| + 1 entries:
/// the exclusive scan of frontier degrees followed by the total.
struct WorkPlan {
  edge_t total_edges = 0;
  std::vector<edge_t> degree_prefix;
  std::vector<edge_t> chunk_starts;
  std::vector<vertex_t> source_of_chunk_start;
  std::vector<std::size_t> chunk_start_item;  // frontier position owning each chunk start

  std::size_t num_chunks() const noexcept { return chunk_starts.size(); }
  edge_t chunk_end(std::size_t i) const {
    return i + 1 < chunk_starts.size() ? chunk_starts[i + 1] : total_edges;
  }
};

struct SizeClassBuckets {
  std::vector<std::size_t> large;  // frontier positions, processed first
  std::vector<std::size_t> medium;
  std::vector<std::size_t> small;
  edge_t total_edges = 0;
};

WorkPlan plan_per_element(const Frontier& f, const CsrGraph& g);
SizeClassBuckets plan_size_classes(const Frontier& f, const CsrGraph& g, edge_t small_max, edge_t medium_max);
WorkPlan plan_balanced_partition(const Frontier& f, const CsrGraph& g, edge_t chunk_size,
                                 Granularity granularity = Granularity::Edge);

// Visitor signature: (int worker, std::size_t item_pos, vertex_t src, vertex_t dst, edge_t edge).
// Every edge covered by the plan is visited exactly once.
template <class Visitor>
void execute_plan(const CsrGraph& g, const Frontier& f, const WorkPlan& plan, Visitor&& visit) {
  const auto chunks = static_cast<long>(plan.num_chunks());
  if (plan.total_edges == 0) return;
  const auto& prefix = plan.degree_prefix;
#pragma omp parallel
  {
    const int worker = omp_get_thread_num();
#pragma omp for schedule(static)
    for (long c = 0; c < chunks; ++c) {
      const auto chunk = static_cast<std::size_t>(c);
      const edge_t hi = plan.chunk_end(chunk);
      std::size_t pos = plan.chunk_start_item[chunk];
      for (edge_t k = plan.chunk_starts[chunk]; k < hi;) {
        if (k >= prefix[pos + 1]) {
          // Entering a new list: binary search for its owner.
          pos = static_cast<std::size_t>(std::upper_bound(prefix.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                                          prefix.end(), k) -
                                         prefix.begin()) -
                1;
        }
        const vertex_t src = expansion_vertex(g, f, pos);
        const edge_t base = g.first_edge(src) - prefix[pos];
        const edge_t stop = std::min(hi, prefix[pos + 1]);
        for (; k < stop; ++k) {
          const edge_t e = base + k;
          visit(worker, pos, src, g.edge_dest(e), e);
        }
      }
    }
  }
}

template <class Visitor>
void execute_size_classes(const CsrGraph& g, const Frontier& f, const SizeClassBuckets& buckets,
                          Visitor&& visit) {
  auto whole_list = [&](int worker, std::size_t pos) {
    const vertex_t src = expansion_vertex(g, f, pos);
    const edge_t first = g.first_edge(src);
    const edge_t last = first + g.degree(src);
    for (edge_t e = first; e < last; ++e) visit(worker, pos, src, g.edge_dest(e), e);
  };
  const auto medium = static_cast<long>(buckets.medium.size());
  const auto small = static_cast<long>(buckets.small.size());
#pragma omp parallel
  {
    const int worker = omp_get_thread_num();
    for (std::size_t pos : buckets.large) {
      const vertex_t src = expansion_vertex(g, f, pos);
      const edge_t first = g.first_edge(src);
      const edge_t degree = g.degree(src);
#pragma omp for schedule(static)
      for (edge_t k = 0; k < degree; ++k) visit(worker, pos, src, g.edge_dest(first + k), first + k);
    }
#pragma omp for schedule(static, 1)
    for (long i = 0; i < medium; ++i) whole_list(worker, buckets.medium[static_cast<std::size_t>(i)]);
#pragma omp for schedule(static)
    for (long i = 0; i < small; ++i) whole_list(worker, buckets.small[static_cast<std::size_t>(i)]);
  }
}

// Plans and runs `strategy` over the frontier; returns the number of edges visited.
template <class Visitor>
edge_t for_each_frontier_edge(const CsrGraph& g, const Frontier& f, const Strategy& strategy,
                              Visitor&& visit) {
  if (const auto* sc = std::get_if<SizeClassGrouping>(&strategy)) {
    auto buckets = plan_size_classes(f, g, sc->small_max, sc->medium_max);
    execute_size_classes(g, f, buckets, visit);
    return buckets.total_edges;
  }
  WorkPlan plan;
  if (const auto* bp = std::get_if<BalancedPartition>(&strategy)) {
    plan = plan_balanced_partition(f, g, bp->chunk_size, bp->granularity);
  } else {
    plan = plan_per_element(f, g);
  }
  execute_plan(g, f, plan, visit);
  return plan.total_edges;
}

}  // namespace fgraph
