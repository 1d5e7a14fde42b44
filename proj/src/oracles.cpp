#include "fgraph/oracles.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace fgraph::oracle {

std::vector<std::int32_t> bfs_depths(const CsrGraph& g, vertex_t source) {
  std::vector<std::int32_t> depth(static_cast<std::size_t>(g.num_vertices()), kInfDepth);
  std::queue<vertex_t> q;
  depth[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const vertex_t u = q.front();
    q.pop();
    for (vertex_t v : g.neighbors(u)) {
      if (depth[static_cast<std::size_t>(v)] == kInfDepth) {
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
    }
  }
  return depth;
}

std::vector<distance_t> dijkstra(const CsrGraph& g, vertex_t source) {
  std::vector<distance_t> dist(static_cast<std::size_t>(g.num_vertices()), kInfDistance);
  using Entry = std::pair<distance_t, vertex_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du != dist[static_cast<std::size_t>(u)]) continue;
    const edge_t first = g.first_edge(u);
    for (edge_t e = first; e < first + g.degree(u); ++e) {
      const vertex_t v = g.edge_dest(e);
      const distance_t nd = du + (g.has_weights() ? g.edge_weight(e) : 1);
      if (nd < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

std::vector<double> brandes(const CsrGraph& g, std::span<const vertex_t> sources) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<double> bc(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int32_t> dist(n);
  std::vector<vertex_t> order;
  order.reserve(n);
  for (vertex_t s : sources) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<vertex_t> q;
    q.push(s);
    while (!q.empty()) {
      const vertex_t u = q.front();
      q.pop();
      order.push_back(u);
      for (vertex_t v : g.neighbors(u)) {
        const auto vi = static_cast<std::size_t>(v);
        if (dist[vi] < 0) {
          dist[vi] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
        if (dist[vi] == dist[static_cast<std::size_t>(u)] + 1) sigma[vi] += sigma[static_cast<std::size_t>(u)];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const vertex_t u = *it;
      const auto ui = static_cast<std::size_t>(u);
      for (vertex_t v : g.neighbors(u)) {
        const auto vi = static_cast<std::size_t>(v);
        if (dist[vi] == dist[ui] + 1) delta[ui] += sigma[ui] / sigma[vi] * (1.0 + delta[vi]);
      }
      if (u != s) bc[ui] += delta[ui];
    }
  }
  if (g.is_symmetric()) {
    for (double& x : bc) x *= 0.5;
  }
  return bc;
}

std::vector<double> brandes_all(const CsrGraph& g) {
  std::vector<vertex_t> sources(static_cast<std::size_t>(g.num_vertices()));
  std::iota(sources.begin(), sources.end(), 0);
  return brandes(g, sources);
}

namespace {

vertex_t find_root(std::vector<vertex_t>& parent, vertex_t v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    auto& p = parent[static_cast<std::size_t>(v)];
    p = parent[static_cast<std::size_t>(p)];
    v = p;
  }
  return v;
}

}  // namespace

std::vector<vertex_t> components(const CsrGraph& g) {
  const vertex_t n = g.num_vertices();
  std::vector<vertex_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (edge_t e = 0; e < g.num_edges(); ++e) {
    const vertex_t a = find_root(parent, g.edge_source(e));
    const vertex_t b = find_root(parent, g.edge_dest(e));
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<vertex_t> label(static_cast<std::size_t>(n));
  for (vertex_t v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = find_root(parent, v);
  return label;
}

std::vector<double> power_iteration(const CsrGraph& g, double damping, double tolerance, std::size_t max_iters) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (n == 0) return {};
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n);
  for (std::size_t it = 0; it < max_iters; ++it) {
    double dangling = 0.0;
    std::fill(next.begin(), next.end(), 0.0);
    for (vertex_t u = 0; u < static_cast<vertex_t>(n); ++u) {
      const edge_t deg = g.degree(u);
      const double r = rank[static_cast<std::size_t>(u)];
      if (deg == 0) {
        dangling += r;
        continue;
      }
      const double share = r / static_cast<double>(deg);
      for (vertex_t v : g.neighbors(u)) next[static_cast<std::size_t>(v)] += share;
    }
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = (1.0 - damping) * inv_n + damping * (next[v] + dangling * inv_n);
      change += std::abs(next[v] - rank[v]);
    }
    rank.swap(next);
    if (change < tolerance) break;
  }
  return rank;
}

bool same_partition(std::span<const vertex_t> a, std::span<const vertex_t> b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<vertex_t, vertex_t> forward;
  std::unordered_map<vertex_t, vertex_t> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [f, fnew] = forward.emplace(a[i], b[i]);
    if (!fnew && f->second != b[i]) return false;
    const auto [r, rnew] = backward.emplace(b[i], a[i]);
    if (!rnew && r->second != a[i]) return false;
  }
  return true;
}

}  // namespace fgraph::oracle
