#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "fgraph/graph.hpp"
#include "fgraph/types.hpp"

namespace fgraph {

// Explicit, ordered set of vertex ids or edge ids taking part in one
// bulk-synchronous step.
struct Frontier {
  FrontierKind kind = FrontierKind::Vertex;
  std::vector<item_t> items;
  std::size_t generation = 0;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }

  static Frontier vertices(std::vector<item_t> ids, std::size_t generation = 0) {
    return {FrontierKind::Vertex, std::move(ids), generation};
  }
  static Frontier edges(std::vector<item_t> ids, std::size_t generation = 0) {
    return {FrontierKind::Edge, std::move(ids), generation};
  }
  static Frontier all_vertices(vertex_t n) {
    Frontier f{FrontierKind::Vertex, std::vector<item_t>(static_cast<std::size_t>(n)), 0};
    std::iota(f.items.begin(), f.items.end(), item_t{0});
    return f;
  }
  static Frontier all_edges(edge_t m) {
    Frontier f{FrontierKind::Edge, std::vector<item_t>(static_cast<std::size_t>(m)), 0};
    std::iota(f.items.begin(), f.items.end(), item_t{0});
    return f;
  }
};

// The vertex whose neighbor list an advance expands for frontier item `i`:
// the item itself for vertex frontiers, the edge's destination for edge frontiers.
inline vertex_t expansion_vertex(const CsrGraph& g, const Frontier& f, std::size_t i) {
  return f.kind == FrontierKind::Vertex ? static_cast<vertex_t>(f.items[i]) : g.edge_dest(f.items[i]);
}

// Throws UsageError if any item is not a valid id for the frontier's kind.
void check_frontier(const CsrGraph& g, const Frontier& f);

}  // namespace fgraph
