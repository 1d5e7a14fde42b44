#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "fgraph/types.hpp"

namespace fgraph {

// Number of workers the next parallel region will use.
int worker_count();

// Caps the worker pool for the lifetime of the object. n <= 0 leaves it alone.
class WorkerScope {
 public:
  explicit WorkerScope(int n);
  ~WorkerScope();
  WorkerScope(const WorkerScope&) = delete;
  WorkerScope& operator=(const WorkerScope&) = delete;

 private:
  int previous_;
  bool active_;
};

// Helpers through which functors mutate shared problem data. Each returns
// the value held before the update, like the device intrinsics they mirror.

template <class T>
T atomic_load(const T& slot) {
  return std::atomic_ref<T>(const_cast<T&>(slot)).load(std::memory_order_relaxed);
}

template <class T>
void atomic_store(T& slot, T value) {
  std::atomic_ref<T>(slot).store(value, std::memory_order_relaxed);
}

template <class T>
T atomic_min(T& slot, T value) {
  std::atomic_ref<T> ref(slot);
  T old = ref.load(std::memory_order_relaxed);
  while (value < old && !ref.compare_exchange_weak(old, value, std::memory_order_relaxed)) {
  }
  return old;
}

template <class T>
T atomic_add(T& slot, T value) {
  return std::atomic_ref<T>(slot).fetch_add(value, std::memory_order_relaxed);
}

template <class T>
T atomic_exchange(T& slot, T value) {
  return std::atomic_ref<T>(slot).exchange(value, std::memory_order_relaxed);
}

// On failure `expected` is left untouched; use the return value to learn the outcome.
template <class T>
bool compare_and_swap(T& slot, T expected, T desired) {
  return std::atomic_ref<T>(slot).compare_exchange_strong(expected, desired, std::memory_order_relaxed);
}

// Exclusive prefix sum in two parallel passes (per-block sums, then offsets).
// `out` must have the same length as `in`; returns the grand total.
edge_t exclusive_scan(std::span<const edge_t> in, std::span<edge_t> out);

// Even static split of [0, n) across `parts` workers: bounds of part `i`.
inline std::pair<std::size_t, std::size_t> block_range(std::size_t n, int parts, int i) {
  const std::size_t p = static_cast<std::size_t>(parts);
  const std::size_t k = static_cast<std::size_t>(i);
  return {n * k / p, n * (k + 1) / p};
}

// Concatenates per-worker buffers in worker order.
std::vector<item_t> concat_buffers(std::vector<std::vector<item_t>>& buffers);

}  // namespace fgraph
