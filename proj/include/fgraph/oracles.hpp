#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fgraph/graph.hpp"

// Serial reference implementations used for validation. None of them use
// the frontier operators.
namespace fgraph::oracle {

std::vector<std::int32_t> bfs_depths(const CsrGraph& g, vertex_t source);

// Binary-heap Dijkstra; unreached vertices get kInfDistance.
std::vector<distance_t> dijkstra(const CsrGraph& g, vertex_t source);

// Brandes betweenness over `sources` with hop-count paths, halved when the
// graph is symmetric.
std::vector<double> brandes(const CsrGraph& g, std::span<const vertex_t> sources);
std::vector<double> brandes_all(const CsrGraph& g);

// Union-find over all edges, ignoring direction. Each entry is the
// smallest vertex id in its component.
std::vector<vertex_t> components(const CsrGraph& g);

// Synchronous power iteration with uniform dangling redistribution, run
// until the L1 change drops below `tolerance` or `max_iters` is hit.
std::vector<double> power_iteration(const CsrGraph& g, double damping, double tolerance = 1e-13,
                                    std::size_t max_iters = 100000);

// True iff both labelings induce the same equivalence classes.
bool same_partition(std::span<const vertex_t> a, std::span<const vertex_t> b);

}  // namespace fgraph::oracle
