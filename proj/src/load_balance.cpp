#include "fgraph/load_balance.hpp"

#include "fgraph/parallel.hpp"

namespace fgraph {

void check_frontier(const CsrGraph& g, const Frontier& f) {
  const item_t limit = f.kind == FrontierKind::Vertex ? g.num_vertices() : g.num_edges();
  for (item_t item : f.items) {
    if (item < 0 || item >= limit) {
      throw UsageError(std::string(to_string(f.kind)) + " frontier item " + std::to_string(item) +
                       " out of range [0, " + std::to_string(limit) + ")");
    }
  }
}

StrategyKind parse_strategy_kind(const std::string& name) {
  if (name == "auto") return StrategyKind::Auto;
  if (name == "per-element") return StrategyKind::PerElement;
  if (name == "size-class") return StrategyKind::SizeClass;
  if (name == "balanced") return StrategyKind::Balanced;
  throw UsageError("unknown strategy '" + name + "' (expected auto, per-element, size-class or balanced)");
}

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Auto:
      return "auto";
    case StrategyKind::PerElement:
      return "per-element";
    case StrategyKind::SizeClass:
      return "size-class";
    case StrategyKind::Balanced:
      return "balanced";
  }
  return "?";
}

std::string describe(const Strategy& strategy) {
  if (std::holds_alternative<PerElement>(strategy)) return "per-element";
  if (const auto* sc = std::get_if<SizeClassGrouping>(&strategy)) {
    return "size-class(" + std::to_string(sc->small_max) + "," + std::to_string(sc->medium_max) + ")";
  }
  const auto& bp = std::get<BalancedPartition>(strategy);
  return std::string("balanced(") + std::to_string(bp.chunk_size) + "," +
         (bp.granularity == Granularity::Node ? "node" : "edge") + ")";
}

namespace {

BalancedPartition balanced_for(const Frontier& f, const LoadBalanceOptions& options) {
  return {options.chunk_size, f.size() < options.threshold ? Granularity::Node : Granularity::Edge};
}

// Exclusive scan of frontier degrees with the total appended.
std::vector<edge_t> frontier_degree_prefix(const Frontier& f, const CsrGraph& g) {
  const std::size_t n = f.size();
  std::vector<edge_t> degrees(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    degrees[static_cast<std::size_t>(i)] = g.degree(expansion_vertex(g, f, static_cast<std::size_t>(i)));
  }
  std::vector<edge_t> prefix(n + 1, 0);
  prefix[n] = exclusive_scan(degrees, std::span<edge_t>(prefix).first(n));
  return prefix;
}

// Frontier position whose list contains global edge offset k.
std::size_t owner_of(const std::vector<edge_t>& prefix, edge_t k) {
  return static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), k) - prefix.begin()) - 1;
}

}  // namespace

Strategy select_strategy(const Frontier& f, const CsrGraph& g, const LoadBalanceOptions& options) {
  if (g.max_degree() <= options.medium_max) return SizeClassGrouping{options.small_max, options.medium_max};
  return balanced_for(f, options);
}

Strategy resolve_strategy(const Frontier& f, const CsrGraph& g, const LoadBalanceOptions& options) {
  switch (options.kind) {
    case StrategyKind::PerElement:
      return PerElement{};
    case StrategyKind::SizeClass:
      return SizeClassGrouping{options.small_max, options.medium_max};
    case StrategyKind::Balanced:
      return balanced_for(f, options);
    case StrategyKind::Auto:
      break;
  }
  return select_strategy(f, g, options);
}

WorkPlan plan_per_element(const Frontier& f, const CsrGraph& g) {
  WorkPlan plan;
  plan.degree_prefix = frontier_degree_prefix(f, g);
  plan.total_edges = plan.degree_prefix.back();
  const std::size_t n = f.size();
  plan.chunk_starts.assign(plan.degree_prefix.begin(), plan.degree_prefix.end() - 1);
  plan.chunk_start_item.resize(n);
  plan.source_of_chunk_start.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    plan.chunk_start_item[i] = i;
    plan.source_of_chunk_start[i] = expansion_vertex(g, f, i);
  }
  return plan;
}

SizeClassBuckets plan_size_classes(const Frontier& f, const CsrGraph& g, edge_t small_max, edge_t medium_max) {
  if (!(small_max < medium_max)) throw UsageError("size classes need small_max < medium_max");
  SizeClassBuckets buckets;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const edge_t d = g.degree(expansion_vertex(g, f, i));
    buckets.total_edges += d;
    if (d > medium_max) {
      buckets.large.push_back(i);
    } else if (d > small_max) {
      buckets.medium.push_back(i);
    } else {
      buckets.small.push_back(i);
    }
  }
  return buckets;
}

WorkPlan plan_balanced_partition(const Frontier& f, const CsrGraph& g, edge_t chunk_size, Granularity granularity) {
  if (chunk_size < 1) throw UsageError("chunk_size must be at least 1");
  WorkPlan plan;
  plan.degree_prefix = frontier_degree_prefix(f, g);
  plan.total_edges = plan.degree_prefix.back();
  if (plan.total_edges == 0) return plan;

  const edge_t chunks = (plan.total_edges + chunk_size - 1) / chunk_size;
  std::vector<edge_t> starts(static_cast<std::size_t>(chunks));
  std::vector<std::size_t> owners(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (edge_t c = 0; c < chunks; ++c) {
    starts[static_cast<std::size_t>(c)] = c * chunk_size;
    owners[static_cast<std::size_t>(c)] = owner_of(plan.degree_prefix, c * chunk_size);
  }

  if (granularity == Granularity::Node) {
    // Snap each boundary to the start of its owner's list; a list spanning
    // several boundaries collapses into one chunk.
    for (std::size_t c = 0; c < owners.size(); ++c) {
      if (!plan.chunk_start_item.empty() && plan.chunk_start_item.back() == owners[c]) continue;
      plan.chunk_start_item.push_back(owners[c]);
      plan.chunk_starts.push_back(plan.degree_prefix[owners[c]]);
    }
  } else {
    plan.chunk_starts = std::move(starts);
    plan.chunk_start_item = std::move(owners);
  }
  plan.source_of_chunk_start.reserve(plan.chunk_start_item.size());
  for (std::size_t pos : plan.chunk_start_item) plan.source_of_chunk_start.push_back(expansion_vertex(g, f, pos));
  return plan;
}

}  // namespace fgraph
