#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ksssp/graph.hpp"
#include "ksssp/path.hpp"
#include "ksssp/profile.hpp"

namespace ksssp {

/// Counters for one solver run. A normal insertion extends a dequeued path by
/// one edge; an exceptional insertion enqueues a path produced by the
/// single-pair subroutine during super-saturation. The initial root path is
/// neither.
struct RunStats {
  std::uint64_t normal_insertions = 0;
  std::uint64_t exceptional_insertions = 0;
  std::uint64_t dequeues = 0;
  std::uint64_t pksp_calls = 0;
  std::uint64_t pruning_calls = 0;
  std::size_t peak_queue_size = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

enum class Insertion { normal, exceptional };

class SolverCancelled : public std::runtime_error {
 public:
  SolverCancelled() : std::runtime_error("solver run cancelled") {}
};

/// Optional instrumentation. Every member may be left empty.
struct RunHooks {
  std::function<void(const Path&)> on_dequeue;
  std::function<void(const Path&, Insertion)> on_enqueue;
  /// Called every `progress_interval` dequeues (or single-pair calls for the
  /// SS-YEN baseline) with the running count and the unsaturated count.
  std::function<void(std::uint64_t, std::size_t)> on_progress;
  std::uint64_t progress_interval = 4096;
  /// Polled periodically; returning true aborts the run with SolverCancelled.
  std::function<bool()> cancelled;
};

/// Stamp-based visited set reused across traversals.
class VisitMarker {
 public:
  explicit VisitMarker(std::size_t n) : stamp_(n, 0) {}
  void reset() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  /// Marks v; returns false if it was already marked since the last reset.
  bool mark(VertexId v) {
    if (stamp_[v] == epoch_) return false;
    stamp_[v] = epoch_;
    return true;
  }
  bool marked(VertexId v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

/// Per-run mutable state shared by the single-source solvers: the growing
/// collections T_v, their vertex sets, saturation bookkeeping and the
/// super-saturated set.
class SolverState {
 public:
  SolverState(std::size_t vertex_count, VertexId root, std::size_t k);

  VertexId root() const { return root_; }
  std::size_t k() const { return k_; }
  std::size_t vertex_count() const { return paths_.size(); }

  const std::vector<Path>& paths(VertexId v) const { return paths_[v]; }
  bool saturated(VertexId v) const { return paths_[v].size() >= k_; }
  /// |{w != root : |T_w| < k}|
  std::size_t unsaturated_count() const { return unsaturated_; }

  /// Appends p (which must end at v) to T_v. Throws std::logic_error if T_v is
  /// full or p is lighter than the current last entry.
  void append(VertexId v, Path p);
  bool holds(VertexId v, const Path& p) const;

  /// V(T_x): vertices on the paths of T_x other than x itself, sorted.
  std::span<const VertexId> predecessors(VertexId x) const { return predecessors_[x]; }
  bool is_predecessor(VertexId x, VertexId u) const;

  bool super_saturated(VertexId v) const { return super_saturated_[v] != 0; }
  void mark_super_saturated(VertexId v) { super_saturated_[v] = 1; }

  /// Scratch visited-set for closure traversals (pruning, super-saturation).
  VisitMarker& closure_marker() { return closure_marker_; }

  RunStats stats;

 private:
  VisitMarker closure_marker_;
  VertexId root_;
  std::size_t k_;
  std::size_t unsaturated_;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::vector<VertexId>> predecessors_;
  std::vector<char> super_saturated_;
};

/// Result of a single-source run. `collections[v]` is the ranked r-v
/// collection for v != root; the root's entry is empty.
struct SsKsspSolution {
  VertexId root = kNoVertex;
  std::size_t k = 0;
  std::vector<PathCollection> collections;
  RunStats stats;

  const PathCollection& at(VertexId v) const { return collections.at(v); }
  std::vector<Profile> profiles() const;

  static SsKsspSolution from_state(const SolverState& state);
};

}  // namespace ksssp
