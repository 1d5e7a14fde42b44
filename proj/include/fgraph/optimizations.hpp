#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <omp.h>
#include <span>
#include <utility>
#include <vector>

#include "fgraph/frontier.hpp"
#include "fgraph/functors.hpp"
#include "fgraph/graph.hpp"
#include "fgraph/parallel.hpp"
#include "fgraph/workspace.hpp"

namespace fgraph {

/// One bit per vertex. `test_and_set` is safe for concurrent workers;
/// set_count() reflects the bits as of the last recount().
class VisitedBitmap {
 public:
  VisitedBitmap() = default;
  explicit VisitedBitmap(vertex_t n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  vertex_t size() const noexcept { return n_; }
  bool test(vertex_t v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (static_cast<unsigned>(v) & 63U)) & 1U;
  }
  // Returns the previous state of the bit.
  bool test_and_set(vertex_t v) {
    const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(v) & 63U);
    const std::uint64_t old =
        std::atomic_ref<std::uint64_t>(words_[static_cast<std::size_t>(v) >> 6]).fetch_or(mask, std::memory_order_relaxed);
    return (old & mask) != 0;
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); set_count_ = 0; }
  std::size_t recount() {
    set_count_ = 0;
    for (std::uint64_t w : words_) set_count_ += static_cast<std::size_t>(std::popcount(w));
    return set_count_;
  }
  std::size_t set_count() const noexcept { return set_count_; }

 private:
  vertex_t n_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t set_count_ = 0;
};

// Bit v set iff v is in the vertex frontier.
VisitedBitmap frontier_to_bitmap(const Frontier& f, vertex_t n);

// Auto picks Pull exactly when fewer vertices remain unvisited than sit in
// the current frontier; Push and Pull pass through.
Direction decide_direction(std::size_t frontier_size, std::size_t unvisited_count, Direction mode);

/// Pull-style advance. Each candidate vertex u that is not yet in `visited`
/// scans its incoming neighbors and stops at the first p in `visited` with
/// cond_edge(p, u, e); apply_edge then fires once and u joins the output.
/// `incoming` is the reverse adjacency (the graph itself when symmetric).
/// Without `candidates`, every vertex is a candidate.
template <EdgeFunctor F>
Frontier pull_advance(const CsrGraph& incoming, const VisitedBitmap& visited, F& fs, Workspace& ws,
                      const std::vector<item_t>* candidates = nullptr) {
  auto& buffers = ws.buffers();
  const auto count = static_cast<long>(candidates ? candidates->size()
                                                  : static_cast<std::size_t>(incoming.num_vertices()));
  std::uint64_t inspected = 0;
#pragma omp parallel reduction(+ : inspected)
  {
    auto& out = buffers[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < count; ++i) {
      const auto u = static_cast<vertex_t>(candidates ? (*candidates)[static_cast<std::size_t>(i)] : i);
      if (visited.test(u)) continue;
      const edge_t first = incoming.first_edge(u);
      const edge_t last = first + incoming.degree(u);
      for (edge_t e = first; e < last; ++e) {
        const vertex_t p = incoming.edge_dest(e);
        ++inspected;
        if (visited.test(p) && fs.cond_edge(p, u, e)) {
          fs.apply_edge(p, u, e);
          out.push_back(u);
          break;
        }
      }
    }
  }
  ws.stats.edges_inspected += inspected;
  ++ws.stats.pull_steps;
  return Frontier::vertices(concat_buffers(buffers));
}

/// Best-effort duplicate culling state: a shared history bitmap probed
/// (never written) during culling, plus per-worker recent-item windows.
struct CullingState {
  static constexpr std::size_t kWindow = 1024;

  explicit CullingState(vertex_t n) : history(n) {}

  // Marks every item of `f` as seen by earlier steps.
  void remember(const Frontier& f);

  VisitedBitmap history;
};

// Drops items found in the worker's recent window or in the history bitmap.
// Never drops the last copy of an item absent from the history.
Frontier idempotent_dedupe(const Frontier& f, const CullingState& state);

struct NearFarQueue {
  Frontier near;
  Frontier far;
  distance_t delta = 1;
  std::int64_t level = 0;  // current band is [level * delta, (level + 1) * delta)
};

// near: labels[v] < (level + 1) * delta; far: the rest. Order within each
// slice follows the input. Throws UsageError for delta <= 0.
std::pair<Frontier, Frontier> split_near_far(const Frontier& f, std::span<const distance_t> labels,
                                             distance_t delta, std::int64_t level);

// Moves to the lowest band holding a far element and re-splits the far
// slice. Throws UsageError if the near slice is not empty.
NearFarQueue advance_level(NearFarQueue q, std::span<const distance_t> labels);

}  // namespace fgraph
