#include "fgraph/primitives/pagerank.hpp"

#include <cmath>
#include <cstdint>

#include "fgraph/operators.hpp"

namespace fgraph {

namespace {

// Contributions are accumulated as fixed-point integers so the sum does not
// depend on the order in which workers add them.
constexpr double kScale = 4611686018427387904.0;  // 2^62

std::int64_t to_fixed(double x) { return std::llround(x * kScale); }

struct Scatter {
  const std::vector<std::int64_t>& share;
  std::vector<std::int64_t>& accumulator;

  bool cond_edge(vertex_t, vertex_t, edge_t) { return true; }
  void apply_edge(vertex_t s, vertex_t d, edge_t) {
    atomic_add(accumulator[static_cast<std::size_t>(d)], share[static_cast<std::size_t>(s)]);
  }
};

struct StillMoving {
  const std::vector<double>& rank;
  const std::vector<double>& next;
  double threshold;

  bool cond_vertex(vertex_t v) {
    const auto i = static_cast<std::size_t>(v);
    return std::abs(next[i] - rank[i]) >= threshold;
  }
  void apply_vertex(vertex_t) {}
};

}  // namespace

PagerankResult pagerank(const CsrGraph& g, const PagerankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0)) throw UsageError("damping must lie in (0, 1)");
  if (!(options.epsilon > 0.0)) throw UsageError("epsilon must be positive");

  const vertex_t n = g.num_vertices();
  const auto un = static_cast<std::size_t>(n);
  PagerankResult result;
  if (n == 0) return result;

  const double d = options.damping;
  const double base = (1.0 - d) / static_cast<double>(n);
  const double threshold = options.epsilon / static_cast<double>(n);

  std::vector<double> rank(un, 1.0 / static_cast<double>(n));
  std::vector<double> next(un, 0.0);
  std::vector<std::int64_t> share(un, 0);
  std::vector<std::int64_t> accumulator(un, 0);

  Workspace ws(n);
  AdvanceConfig cfg;
  cfg.idempotent = true;
  cfg.discard_output = true;
  cfg.load_balance = options.load_balance;

  const Frontier everyone = Frontier::all_vertices(n);
  Frontier active = everyone;
  while (!active.empty() && result.iterations < options.max_iters) {
    ++result.iterations;
    ++ws.stats.iterations;

    std::int64_t dangling = 0;
#pragma omp parallel for schedule(static) reduction(+ : dangling)
    for (long v = 0; v < static_cast<long>(n); ++v) {
      const auto i = static_cast<std::size_t>(v);
      const edge_t deg = g.degree(static_cast<vertex_t>(v));
      accumulator[i] = 0;
      if (deg == 0) {
        share[i] = 0;
        dangling += to_fixed(rank[i]);
      } else {
        share[i] = to_fixed(rank[i] / static_cast<double>(deg));
      }
    }

    Scatter scatter{share, accumulator};
    advance(g, everyone, scatter, cfg, ws);

    const double spread = static_cast<double>(dangling) / kScale / static_cast<double>(n);
    compute(everyone, [&](item_t v) {
      const auto i = static_cast<std::size_t>(v);
      next[i] = base + d * (static_cast<double>(accumulator[i]) / kScale + spread);
    });

    StillMoving moving{rank, next, threshold};
    active = filter(g, active, moving);
    rank.swap(next);

    double mass = 0.0;
    for (double r : rank) mass += r;
    result.mass_history.push_back(mass);
  }
  result.rank = std::move(rank);
  result.stats = ws.stats;
  return result;
}

}  // namespace fgraph
