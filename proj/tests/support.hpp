#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fgraph/generators.hpp"
#include "fgraph/graph.hpp"

namespace fgraph::testing {

inline EdgeList edge_list(vertex_t n, std::initializer_list<std::pair<vertex_t, vertex_t>> pairs) {
  EdgeList el;
  el.num_vertices = n;
  for (auto [s, d] : pairs) el.edges.push_back({s, d, 0});
  return el;
}

inline EdgeList weighted_edge_list(vertex_t n, std::initializer_list<Edge> edges) {
  EdgeList el;
  el.num_vertices = n;
  el.weighted = true;
  el.edges.assign(edges.begin(), edges.end());
  return el;
}

// {0->1, 0->2, 1->3, 2->3}
inline CsrGraph g1() { return build_csr(edge_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})); }
inline CsrGraph g1_undirected() { return build_csr(to_undirected(edge_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}))); }

inline CsrGraph path(vertex_t n) {
  EdgeList el;
  el.num_vertices = n;
  for (vertex_t v = 0; v + 1 < n; ++v) el.edges.push_back({v, v + 1, 0});
  return build_csr(to_undirected(el));
}

inline CsrGraph star(vertex_t leaves) {
  EdgeList el;
  el.num_vertices = leaves + 1;
  for (vertex_t v = 1; v <= leaves; ++v) el.edges.push_back({0, v, 0});
  return build_csr(to_undirected(el));
}

inline CsrGraph cycle(vertex_t n) {
  EdgeList el;
  el.num_vertices = n;
  for (vertex_t v = 0; v < n; ++v) el.edges.push_back({v, (v + 1) % n, 0});
  return build_csr(to_undirected(el));
}

inline EdgeList generated(const std::string& spec, std::uint64_t seed) {
  return generate_synthetic(parse_generator_spec(spec), seed);
}

struct NamedGraph {
  std::string name;
  CsrGraph graph;
};

// Hand-built graphs of at most ten vertices, weighted.
inline std::vector<NamedGraph> hand_built() {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, EdgeList el) {
    out.push_back({std::move(name), build_csr(assign_random_weights(el, 7))});
  };
  add("g1", edge_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  add("g1-undirected", to_undirected(edge_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  add("path5", path(5).to_edge_list());
  add("star4", star(3).to_edge_list());
  add("cycle6", cycle(6).to_edge_list());
  add("two-edges", to_undirected(edge_list(4, {{0, 1}, {2, 3}})));
  add("isolated3", edge_list(3, {}));
  add("single", edge_list(1, {}));
  add("dangling", edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {4, 3}, {3, 5}}));
  add("complete6", generated("uniform:6:30", 3));
  add("tree10", to_undirected(edge_list(10, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {6, 8}, {8, 9}})));
  return out;
}

}  // namespace fgraph::testing
