#include "ksssp/ranked_queue.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ksssp {

bool RankedPathQueue::push(Path p) {
  if (!members_.insert(p).second) return false;
  heap_.push_back(std::move(p));
  std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
  return true;
}

Path RankedPathQueue::pop() {
  if (heap_.empty()) throw std::logic_error("pop from an empty path queue");
  std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
  Path p = std::move(heap_.back());
  heap_.pop_back();
  members_.erase(p);
  return p;
}

const Path& RankedPathQueue::top() const {
  if (heap_.empty()) throw std::logic_error("top of an empty path queue");
  return heap_.front();
}

bool RankedPathQueue::consistent() const {
  if (members_.size() != heap_.size()) return false;
  return std::all_of(heap_.begin(), heap_.end(), [&](const Path& p) { return contains(p); });
}

}  // namespace ksssp
