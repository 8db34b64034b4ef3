#include "ksssp/closure.hpp"

#include <algorithm>
#include <deque>

namespace ksssp {

std::vector<VertexId> predecessor_set(const PathCollection& c) {
  std::vector<VertexId> out;
  for (const Path& p : c.paths) {
    p.for_each_reversed([&](VertexId v) {
      if (v != c.target) out.push_back(v);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PredecessorClosure::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

PredecessorClosure predecessor_closure(const SsKsspSolution& solution, VertexId v) {
  PredecessorClosure closure;
  closure.anchor = v;
  std::deque<VertexId> fifo{v};
  std::vector<char> seen(solution.collections.size(), 0);
  seen.at(v) = 1;
  while (!fifo.empty()) {
    const VertexId x = fifo.front();
    fifo.pop_front();
    closure.members.push_back(x);
    auto preds = predecessor_set(solution.at(x));
    for (VertexId u : preds) {
      if (!seen[u]) {
        seen[u] = 1;
        fifo.push_back(u);
      }
    }
    closure.predecessors.emplace(x, std::move(preds));
  }
  std::sort(closure.members.begin(), closure.members.end());
  return closure;
}

}  // namespace ksssp
