#include "fgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace fgraph {

const char* to_string(FrontierKind kind) {
  return kind == FrontierKind::Vertex ? "vertex" : "edge";
}

const char* to_string(Direction direction) {
  switch (direction) {
    case Direction::Push:
      return "push";
    case Direction::Pull:
      return "pull";
    case Direction::Auto:
      return "auto";
  }
  return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t pair_key(vertex_t a, vertex_t b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Eccentricity of `start` and the farthest vertex reached (serial BFS).
std::pair<vertex_t, vertex_t> farthest_from(const CsrGraph& g, vertex_t start) {
  std::vector<std::int32_t> depth(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<vertex_t> queue;
  depth[static_cast<std::size_t>(start)] = 0;
  queue.push(start);
  vertex_t last = start;
  while (!queue.empty()) {
    vertex_t u = queue.front();
    queue.pop();
    last = u;
    for (vertex_t v : g.neighbors(u)) {
      if (depth[static_cast<std::size_t>(v)] < 0) {
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        queue.push(v);
      }
    }
  }
  return {last, depth[static_cast<std::size_t>(last)]};
}

}  // namespace

CsrGraph build_csr(const EdgeList& list) {
  if (list.num_vertices < 0) throw GraphError("negative vertex count");
  const auto n = static_cast<std::size_t>(list.num_vertices);
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    const Edge& e = list.edges[i];
    if (e.src < 0 || e.src >= list.num_vertices || e.dst < 0 || e.dst >= list.num_vertices) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(e.src) + " -> " +
                       std::to_string(e.dst) + ") has an endpoint outside [0, " +
                       std::to_string(list.num_vertices) + ")");
    }
    if (list.weighted && e.weight < 0) {
      throw GraphError("edge " + std::to_string(i) + " has negative weight " + std::to_string(e.weight));
    }
  }

  CsrGraph g;
  g.has_weights_ = list.weighted;
  g.row_offsets_.assign(n + 1, 0);
  for (const Edge& e : list.edges) ++g.row_offsets_[static_cast<std::size_t>(e.src) + 1];
  std::partial_sum(g.row_offsets_.begin(), g.row_offsets_.end(), g.row_offsets_.begin());

  // Counting sort by source keeps input order within a list; a stable sort
  // by destination afterwards keeps weights attached to their edges.
  std::vector<std::size_t> order(list.edges.size());
  std::vector<edge_t> cursor(g.row_offsets_.begin(), g.row_offsets_.end() - 1);
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    order[static_cast<std::size_t>(cursor[static_cast<std::size_t>(list.edges[i].src)]++)] = i;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto begin = order.begin() + g.row_offsets_[v];
    auto end = order.begin() + g.row_offsets_[v + 1];
    std::stable_sort(begin, end, [&](std::size_t a, std::size_t b) {
      return list.edges[a].dst < list.edges[b].dst;
    });
  }

  const std::size_t m = list.edges.size();
  g.column_indices_.resize(m);
  g.edge_sources_.resize(m);
  if (list.weighted) g.edge_weights_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = list.edges[order[k]];
    g.column_indices_[k] = e.dst;
    g.edge_sources_[k] = e.src;
    if (list.weighted) g.edge_weights_[k] = e.weight;
  }

  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.row_offsets_[v + 1] - g.row_offsets_[v]);
  }
  g.symmetric_ = true;
  for (std::size_t k = 0; k < m && g.symmetric_; ++k) {
    auto back = g.neighbors(g.column_indices_[k]);
    g.symmetric_ = std::binary_search(back.begin(), back.end(), g.edge_sources_[k]);
  }
  return g;
}

EdgeList CsrGraph::to_edge_list() const {
  EdgeList out;
  out.num_vertices = num_vertices();
  out.weighted = has_weights_;
  out.edges.reserve(column_indices_.size());
  for (std::size_t k = 0; k < column_indices_.size(); ++k) {
    out.edges.push_back({edge_sources_[k], column_indices_[k], has_weights_ ? edge_weights_[k] : 0});
  }
  return out;
}

CsrGraph transpose(const CsrGraph& g) {
  EdgeList reversed;
  reversed.num_vertices = g.num_vertices();
  reversed.weighted = g.has_weights();
  reversed.edges.reserve(static_cast<std::size_t>(g.num_edges()));
  for (edge_t e = 0; e < g.num_edges(); ++e) {
    reversed.edges.push_back({g.edge_dest(e), g.edge_source(e), g.has_weights() ? g.edge_weight(e) : 0});
  }
  return build_csr(reversed);
}

EdgeList to_undirected(const EdgeList& list) {
  // (unordered pair key, input position) sorted by key then position: the
  // first entry of each key is the first occurrence of that pair.
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(list.edges.size());
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    const Edge& e = list.edges[i];
    if (e.src == e.dst) continue;
    keyed.emplace_back(pair_key(std::min(e.src, e.dst), std::max(e.src, e.dst)), i);
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::size_t> firsts;
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    if (k == 0 || keyed[k].first != keyed[k - 1].first) firsts.push_back(keyed[k].second);
  }
  std::sort(firsts.begin(), firsts.end());

  EdgeList out;
  out.num_vertices = list.num_vertices;
  out.weighted = list.weighted;
  out.edges.reserve(2 * firsts.size());
  for (std::size_t i : firsts) {
    const Edge& e = list.edges[i];
    out.edges.push_back(e);
    out.edges.push_back({e.dst, e.src, e.weight});
  }
  return out;
}

EdgeList assign_random_weights(const EdgeList& list, std::uint64_t seed) {
  EdgeList out = list;
  out.weighted = true;
  const std::uint64_t salt = splitmix64(seed);
  for (Edge& e : out.edges) {
    const std::uint64_t key = pair_key(std::min(e.src, e.dst), std::max(e.src, e.dst));
    e.weight = static_cast<weight_t>(splitmix64(key ^ salt) % 64) + 1;
  }
  return out;
}

GraphStats compute_stats(const CsrGraph& g) {
  GraphStats stats;
  stats.max_degree = g.max_degree();
  for (vertex_t v = 0; v < g.num_vertices(); ++v) ++stats.degree_histogram[g.degree(v)];
  if (g.num_vertices() > 0) {
    vertex_t start = 0;
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) == g.max_degree()) {
        start = v;
        break;
      }
    }
    auto [far, ecc] = farthest_from(g, start);
    auto [far2, ecc2] = farthest_from(g, far);
    (void)far2;
    stats.diameter_estimate = std::max(ecc, ecc2);
  }
  return stats;
}

void check_csr_invariants(const CsrGraph& g) {
  auto offsets = g.row_offsets();
  if (offsets.empty() || offsets.front() != 0) throw GraphError("row_offsets[0] != 0");
  if (offsets.back() != g.num_edges()) throw GraphError("row_offsets[n] != num_edges");
  for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
    if (offsets[v] > offsets[v + 1]) throw GraphError("row_offsets decreases at vertex " + std::to_string(v));
  }
  for (edge_t e = 0; e < g.num_edges(); ++e) {
    vertex_t d = g.edge_dest(e);
    if (d < 0 || d >= g.num_vertices()) throw GraphError("column index out of range at edge " + std::to_string(e));
    vertex_t s = g.edge_source(e);
    if (e < g.first_edge(s) || e >= g.first_edge(s) + g.degree(s)) {
      throw GraphError("edge source array disagrees with row offsets at edge " + std::to_string(e));
    }
  }
  if (g.has_weights() && static_cast<edge_t>(g.edge_weights().size()) != g.num_edges()) {
    throw GraphError("edge weight array has wrong length");
  }
}

}  // namespace fgraph
