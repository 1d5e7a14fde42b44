#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fgraph/types.hpp"

namespace fgraph {

struct Edge {
  vertex_t src = 0;
  vertex_t dst = 0;
  weight_t weight = 0;  // meaningful only when the owning EdgeList is weighted

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Flat list of directed edges. When `weighted` is set every edge carries a weight.
struct EdgeList {
  vertex_t num_vertices = 0;
  std::vector<Edge> edges;
  bool weighted = false;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

/// Immutable compressed-sparse-row topology.
///
/// Neighbors of `v` occupy `column_indices()[row_offsets()[v] .. row_offsets()[v+1])`,
/// sorted ascending by destination. Alongside the CSR arrays the graph keeps a
/// flat per-edge source array so that edge ids can be resolved to (src, dst)
/// pairs in O(1) for edge frontiers.
class CsrGraph {
 public:
  CsrGraph() : row_offsets_(1, 0) {}

  vertex_t num_vertices() const noexcept { return static_cast<vertex_t>(row_offsets_.size() - 1); }
  edge_t num_edges() const noexcept { return static_cast<edge_t>(column_indices_.size()); }

  std::span<const edge_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const vertex_t> column_indices() const noexcept { return column_indices_; }
  std::span<const vertex_t> edge_sources() const noexcept { return edge_sources_; }
  std::span<const weight_t> edge_weights() const noexcept { return edge_weights_; }
  bool has_weights() const noexcept { return has_weights_; }

  edge_t first_edge(vertex_t v) const { return row_offsets_[static_cast<std::size_t>(v)]; }
  edge_t degree(vertex_t v) const {
    return row_offsets_[static_cast<std::size_t>(v) + 1] - row_offsets_[static_cast<std::size_t>(v)];
  }
  std::span<const vertex_t> neighbors(vertex_t v) const {
    return std::span<const vertex_t>(column_indices_).subspan(static_cast<std::size_t>(first_edge(v)),
                                                              static_cast<std::size_t>(degree(v)));
  }
  vertex_t edge_source(edge_t e) const { return edge_sources_[static_cast<std::size_t>(e)]; }
  vertex_t edge_dest(edge_t e) const { return column_indices_[static_cast<std::size_t>(e)]; }
  weight_t edge_weight(edge_t e) const { return edge_weights_[static_cast<std::size_t>(e)]; }

  edge_t max_degree() const noexcept { return max_degree_; }
  // True when u is a neighbor of v exactly when v is a neighbor of u.
  bool is_symmetric() const noexcept { return symmetric_; }

  // Recover the directed edge list in CSR order.
  EdgeList to_edge_list() const;

 private:
  friend CsrGraph build_csr(const EdgeList& edges);

  std::vector<edge_t> row_offsets_;
  std::vector<vertex_t> column_indices_;
  std::vector<vertex_t> edge_sources_;
  std::vector<weight_t> edge_weights_;
  bool has_weights_ = false;
  edge_t max_degree_ = 0;
  bool symmetric_ = true;
};

struct GraphStats {
  edge_t max_degree = 0;
  std::optional<vertex_t> diameter_estimate;
  std::map<edge_t, vertex_t> degree_histogram;  // degree -> number of vertices
};

// Throws GraphError naming the first edge whose endpoint is out of range.
CsrGraph build_csr(const EdgeList& edges);

// Reverse every edge (incoming adjacency). Weights follow their edges.
CsrGraph transpose(const CsrGraph& g);

// Drop self-loops, collapse duplicate directed edges (first weight wins) and
// emit each remaining pair in both directions exactly once.
EdgeList to_undirected(const EdgeList& edges);

// Integer weights uniform in [1, 64], a pure function of (seed, {u, v}), so
// mirrored edges agree.
EdgeList assign_random_weights(const EdgeList& edges, std::uint64_t seed);

// Exact degree histogram plus a double-sweep BFS lower bound on the diameter.
GraphStats compute_stats(const CsrGraph& g);

// Throws GraphError if any CSR invariant is violated.
void check_csr_invariants(const CsrGraph& g);

}  // namespace fgraph
