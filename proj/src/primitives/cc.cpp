#include "fgraph/primitives/cc.hpp"

#include <algorithm>

#include "fgraph/operators.hpp"

namespace fgraph {

namespace {

// Odd rounds hook the higher root under the lower one, even rounds the
// reverse. Only roots are rewritten, and within a round every hook points the
// same way, so no cycles form.
struct Hook {
  std::vector<vertex_t>& component;
  bool lower_wins;
  int changed = 0;

  bool cond_edge(vertex_t s, vertex_t d, edge_t) {
    const vertex_t a = atomic_load(component[static_cast<std::size_t>(s)]);
    const vertex_t b = atomic_load(component[static_cast<std::size_t>(d)]);
    if (a == b) return false;
    const vertex_t lo = std::min(a, b);
    const vertex_t hi = std::max(a, b);
    const bool hooked = lower_wins ? compare_and_swap(component[static_cast<std::size_t>(hi)], hi, lo)
                                   : compare_and_swap(component[static_cast<std::size_t>(lo)], lo, hi);
    if (hooked) atomic_store(changed, 1);
    return true;
  }
  void apply_edge(vertex_t, vertex_t, edge_t) {}
};

// component[v] <- component[component[v]]; roots leave the frontier.
struct Jump {
  std::vector<vertex_t>& component;
  int changed = 0;

  bool cond_vertex(vertex_t v) {
    const vertex_t parent = atomic_load(component[static_cast<std::size_t>(v)]);
    if (parent == v) return false;
    const vertex_t grand = atomic_load(component[static_cast<std::size_t>(parent)]);
    if (grand != parent) {
      atomic_store(component[static_cast<std::size_t>(v)], grand);
      atomic_store(changed, 1);
    }
    return true;
  }
  void apply_vertex(vertex_t) {}
};

}  // namespace

CcResult connected_components(const CsrGraph& g) {
  const vertex_t n = g.num_vertices();
  CcResult result;
  auto& component = result.component;
  component.resize(static_cast<std::size_t>(n));
  for (vertex_t v = 0; v < n; ++v) component[static_cast<std::size_t>(v)] = v;

  Frontier edges = Frontier::all_edges(g.num_edges());
  while (!edges.empty()) {
    ++result.hook_rounds;
    ++result.stats.iterations;
    result.stats.edges_inspected += edges.size();
    Hook hook{component, result.hook_rounds % 2 == 1};
    edges = filter(g, edges, hook);
    if (!hook.changed) break;

    Frontier pending = Frontier::all_vertices(n);
    while (true) {
      ++result.jump_passes;
      Jump jump{component};
      pending = filter(g, pending, jump);
      if (!jump.changed) break;
    }
  }

  std::vector<vertex_t> smallest(static_cast<std::size_t>(n), n);
  compute(Frontier::all_vertices(n), [&](item_t v) {
    atomic_min(smallest[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])], static_cast<vertex_t>(v));
  });
  for (vertex_t v = 0; v < n; ++v) {
    if (component[static_cast<std::size_t>(v)] == v) ++result.num_components;
  }
  compute(Frontier::all_vertices(n), [&](item_t v) {
    const auto i = static_cast<std::size_t>(v);
    component[i] = smallest[static_cast<std::size_t>(component[i])];
  });
  return result;
}

}  // namespace fgraph
