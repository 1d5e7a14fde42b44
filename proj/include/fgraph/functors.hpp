#pragma once

#include <concepts>
#include <utility>

#include "fgraph/types.hpp"

namespace fgraph {

// Per-edge callbacks fused into advance and edge-frontier filter passes.
template <class F>
concept EdgeFunctor = requires(F& f, vertex_t s, vertex_t d, edge_t e) {
  { f.cond_edge(s, d, e) } -> std::convertible_to<bool>;
  f.apply_edge(s, d, e);
};

// Per-vertex callbacks fused into vertex-frontier filter passes.
template <class F>
concept VertexFunctor = requires(F& f, vertex_t v) {
  { f.cond_vertex(v) } -> std::convertible_to<bool>;
  f.apply_vertex(v);
};

struct AlwaysTrue {
  template <class... Args>
  constexpr bool operator()(Args&&...) const noexcept {
    return true;
  }
};

struct NoOp {
  template <class... Args>
  constexpr void operator()(Args&&...) const noexcept {}
};

/// Bundles four callables into a functor set. Functors may touch problem
/// data only through the helpers in parallel.hpp or through slots owned
/// exclusively by the element being processed.
template <class CondEdge = AlwaysTrue, class ApplyEdge = NoOp, class CondVertex = AlwaysTrue,
          class ApplyVertex = NoOp>
struct FunctorSet {
  CondEdge cond_edge_fn{};
  ApplyEdge apply_edge_fn{};
  CondVertex cond_vertex_fn{};
  ApplyVertex apply_vertex_fn{};

  bool cond_edge(vertex_t s, vertex_t d, edge_t e) { return cond_edge_fn(s, d, e); }
  void apply_edge(vertex_t s, vertex_t d, edge_t e) { apply_edge_fn(s, d, e); }
  bool cond_vertex(vertex_t v) { return cond_vertex_fn(v); }
  void apply_vertex(vertex_t v) { apply_vertex_fn(v); }
};

template <class CE = AlwaysTrue, class AE = NoOp>
auto edge_functors(CE cond = {}, AE apply = {}) {
  return FunctorSet<CE, AE>{std::move(cond), std::move(apply)};
}

template <class CV = AlwaysTrue, class AV = NoOp>
auto vertex_functors(CV cond = {}, AV apply = {}) {
  return FunctorSet<AlwaysTrue, NoOp, CV, AV>{{}, {}, std::move(cond), std::move(apply)};
}

}  // namespace fgraph
