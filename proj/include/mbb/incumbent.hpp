#pragma once

#include <atomic>
#include <functional>
#include <mutex>

#include "mbb/graph.hpp"

namespace mbb {

/// Best balanced biclique found so far. per_side() only ever increases;
/// offer() is a compare-and-raise and may be called from several threads.
/// Readers of per_side() may observe a stale (smaller) value, which only
/// weakens pruning.
class Incumbent {
 public:
  Incumbent() = default;
  explicit Incumbent(Biclique initial) { offer(std::move(initial)); }

  /// Maps bicliques found in a subgraph back to the coordinates of `parent`.
  using Mapper = std::function<Biclique(const Biclique&)>;

  /// A view of `parent` in subgraph coordinates: per_side() reads the parent
  /// and offer() maps the candidate before raising the parent. best() returns
  /// the parent's biclique in parent coordinates.
  Incumbent(Incumbent& parent, Mapper map) : parent_(&parent), map_(std::move(map)) {}

  Incumbent(const Incumbent&) = delete;
  Incumbent& operator=(const Incumbent&) = delete;

  std::size_t per_side() const {
    return parent_ ? parent_->per_side() : per_side_.load(std::memory_order_acquire);
  }
  std::size_t total() const { return 2 * per_side(); }

  Biclique best() const {
    if (parent_) return parent_->best();
    std::lock_guard lock(mu_);
    return best_;
  }

  /// Balances `candidate` and keeps it if strictly larger than the current
  /// best. Returns whether it was kept.
  bool offer(Biclique candidate) {
    if (parent_) return parent_->offer(map_(candidate));
    candidate.make_balanced();
    const auto k = candidate.per_side();
    std::lock_guard lock(mu_);
    if (k <= per_side_.load(std::memory_order_relaxed)) return false;
    best_ = std::move(candidate);
    per_side_.store(k, std::memory_order_release);
    return true;
  }

 private:
  mutable std::mutex mu_;
  Biclique best_;
  std::atomic<std::size_t> per_side_{0};
  Incumbent* parent_ = nullptr;
  Mapper map_;
};

}  // namespace mbb
