#include "fgraph/parallel.hpp"

#include <algorithm>
#include <omp.h>

namespace fgraph {

int worker_count() { return omp_get_max_threads(); }

WorkerScope::WorkerScope(int n) : previous_(omp_get_max_threads()), active_(n > 0) {
  if (active_) omp_set_num_threads(n);
}

WorkerScope::~WorkerScope() {
  if (active_) omp_set_num_threads(previous_);
}

edge_t exclusive_scan(std::span<const edge_t> in, std::span<edge_t> out) {
  const std::size_t n = in.size();
  if (n == 0) return 0;
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n));
  std::vector<edge_t> block_sums(static_cast<std::size_t>(workers) + 1, 0);

#pragma omp parallel num_threads(workers)
  {
    const int w = omp_get_thread_num();
    const int team = omp_get_num_threads();
    auto [lo, hi] = block_range(n, team, w);
    edge_t sum = 0;
    for (std::size_t i = lo; i < hi; ++i) sum += in[i];
    block_sums[static_cast<std::size_t>(w) + 1] = sum;
#pragma omp barrier
#pragma omp single
    for (int b = 0; b < team; ++b) block_sums[static_cast<std::size_t>(b) + 1] += block_sums[static_cast<std::size_t>(b)];
    edge_t running = block_sums[static_cast<std::size_t>(w)];
    for (std::size_t i = lo; i < hi; ++i) {
      const edge_t value = in[i];
      out[i] = running;
      running += value;
    }
  }
  return out[n - 1] + in[n - 1];
}

std::vector<item_t> concat_buffers(std::vector<std::vector<item_t>>& buffers) {
  std::vector<std::size_t> offsets(buffers.size() + 1, 0);
  for (std::size_t i = 0; i < buffers.size(); ++i) offsets[i + 1] = offsets[i] + buffers[i].size();
  std::vector<item_t> out(offsets.back());
  const auto count = static_cast<long>(buffers.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    std::copy(buffers[static_cast<std::size_t>(i)].begin(), buffers[static_cast<std::size_t>(i)].end(),
              out.begin() + static_cast<std::ptrdiff_t>(offsets[static_cast<std::size_t>(i)]));
    buffers[static_cast<std::size_t>(i)].clear();
  }
  return out;
}

}  // namespace fgraph
