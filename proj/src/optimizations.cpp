#include "fgraph/optimizations.hpp"

#include <array>
#include <limits>

namespace fgraph {

VisitedBitmap frontier_to_bitmap(const Frontier& f, vertex_t n) {
  if (f.kind != FrontierKind::Vertex) throw UsageError("frontier_to_bitmap needs a vertex frontier");
  VisitedBitmap bits(n);
  const auto count = static_cast<long>(f.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) bits.test_and_set(static_cast<vertex_t>(f.items[static_cast<std::size_t>(i)]));
  bits.recount();
  return bits;
}

Direction decide_direction(std::size_t frontier_size, std::size_t unvisited_count, Direction mode) {
  if (mode != Direction::Auto) return mode;
  return unvisited_count < frontier_size ? Direction::Pull : Direction::Push;
}

void CullingState::remember(const Frontier& f) {
  const auto count = static_cast<long>(f.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) history.test_and_set(static_cast<vertex_t>(f.items[static_cast<std::size_t>(i)]));
  history.recount();
}

Frontier idempotent_dedupe(const Frontier& f, const CullingState& state) {
  const int workers = worker_count();
  std::vector<std::vector<item_t>> buffers(static_cast<std::size_t>(workers));
  const std::size_t n = f.size();
#pragma omp parallel num_threads(workers)
  {
    const int w = omp_get_thread_num();
    const int team = omp_get_num_threads();
    std::array<item_t, CullingState::kWindow> window;
    window.fill(-1);
    auto& out = buffers[static_cast<std::size_t>(w)];
    auto [lo, hi] = block_range(n, team, w);
    for (std::size_t i = lo; i < hi; ++i) {
      const item_t v = f.items[i];
      item_t& slot = window[static_cast<std::size_t>(v) & (CullingState::kWindow - 1)];
      if (slot == v) continue;
      slot = v;
      if (state.history.test(static_cast<vertex_t>(v))) continue;
      out.push_back(v);
    }
  }
  return Frontier{f.kind, concat_buffers(buffers), f.generation};
}

namespace {

distance_t band_limit(distance_t delta, std::int64_t level) {
  if (level < 0) return 0;
  if (delta > std::numeric_limits<distance_t>::max() / (level + 1)) return std::numeric_limits<distance_t>::max();
  return (level + 1) * delta;
}

}  // namespace

std::pair<Frontier, Frontier> split_near_far(const Frontier& f, std::span<const distance_t> labels,
                                             distance_t delta, std::int64_t level) {
  if (delta <= 0) throw UsageError("near/far split needs delta > 0");
  const distance_t limit = band_limit(delta, level);
  const int workers = worker_count();
  std::vector<std::vector<item_t>> near(static_cast<std::size_t>(workers));
  std::vector<std::vector<item_t>> far(static_cast<std::size_t>(workers));
  const std::size_t n = f.size();
#pragma omp parallel num_threads(workers)
  {
    const int w = omp_get_thread_num();
    auto [lo, hi] = block_range(n, omp_get_num_threads(), w);
    for (std::size_t i = lo; i < hi; ++i) {
      const item_t v = f.items[i];
      const distance_t label = atomic_load(labels[static_cast<std::size_t>(v)]);
      (label < limit ? near : far)[static_cast<std::size_t>(w)].push_back(v);
    }
  }
  return {Frontier{f.kind, concat_buffers(near), f.generation}, Frontier{f.kind, concat_buffers(far), f.generation}};
}

NearFarQueue advance_level(NearFarQueue q, std::span<const distance_t> labels) {
  if (!q.near.empty()) throw UsageError("advance_level called while the near slice is non-empty");
  if (q.delta <= 0) throw UsageError("near/far queue needs delta > 0");
  if (q.far.empty()) return q;
  distance_t lowest = std::numeric_limits<distance_t>::max();
  for (item_t v : q.far.items) lowest = std::min(lowest, labels[static_cast<std::size_t>(v)]);
  q.level = lowest / q.delta;
  auto [near, far] = split_near_far(q.far, labels, q.delta, q.level);
  q.near = std::move(near);
  q.far = std::move(far);
  return q;
}

}  // namespace fgraph
