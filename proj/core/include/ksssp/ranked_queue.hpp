#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "ksssp/path.hpp"

namespace ksssp {

/// Min-priority queue of paths in the global tie-break order, with a
/// membership index over the paths currently queued.
///
/// Membership is by vertex sequence (fingerprint, then full comparison), so a
/// duplicate is never admitted while its twin is queued. Popping removes the
/// path from the index; it may be pushed again later.
class RankedPathQueue {
 public:
  /// Returns false, leaving the queue unchanged, if an equal path is queued.
  bool push(Path p);
  /// Removes and returns the minimum. Throws std::logic_error when empty.
  Path pop();
  const Path& top() const;

  bool contains(const Path& p) const { return members_.count(p) != 0; }
  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }

  /// Index and heap agree in size and content.
  bool consistent() const;

 private:
  std::vector<Path> heap_;
  std::unordered_set<Path, PathKeyHash, PathSequenceEqual> members_;
};

}  // namespace ksssp
