#pragma once

#include <cstdint>
#include <vector>

#include "fgraph/parallel.hpp"
#include "fgraph/types.hpp"

namespace fgraph {

// Counters filled in by the instrumented operators.
struct TraversalStats {
  std::size_t iterations = 0;
  std::uint64_t edges_inspected = 0;
  std::size_t advance_calls = 0;
  std::size_t pull_steps = 0;

  TraversalStats& operator+=(const TraversalStats& o) {
    iterations += o.iterations;
    edges_inspected += o.edges_inspected;
    advance_calls += o.advance_calls;
    pull_steps += o.pull_steps;
    return *this;
  }
};

/// Scratch state owned by one traversal run: per-worker output buffers, the
/// claim stamps a non-idempotent advance uses to emit each vertex once, and
/// the counters. Not reentrant; one per concurrently running primitive.
class Workspace {
 public:
  explicit Workspace(vertex_t num_vertices)
      : claim_stamps_(static_cast<std::size_t>(num_vertices), 0) {}

  std::vector<std::vector<item_t>>& buffers() {
    const auto workers = static_cast<std::size_t>(worker_count());
    if (buffers_.size() < workers) buffers_.resize(workers);
    return buffers_;
  }

  // Starts a new claim round; returns its stamp.
  std::uint32_t next_claim_round() {
    if (++claim_round_ == 0) {
      std::fill(claim_stamps_.begin(), claim_stamps_.end(), 0u);
      claim_round_ = 1;
    }
    return claim_round_;
  }

  // True for exactly one caller per (vertex, round).
  bool claim(vertex_t v, std::uint32_t round) {
    return atomic_exchange(claim_stamps_[static_cast<std::size_t>(v)], round) != round;
  }

  TraversalStats stats;

 private:
  std::vector<std::vector<item_t>> buffers_;
  std::vector<std::uint32_t> claim_stamps_;
  std::uint32_t claim_round_ = 0;
};

}  // namespace fgraph
