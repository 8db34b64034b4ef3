#pragma once

#include <map>
#include <vector>

#include "ksssp/profile.hpp"
#include "ksssp/solver_state.hpp"

namespace ksssp {

/// V(S_rv): every vertex on a path of the collection except its target.
/// Sorted, duplicate-free.
std::vector<VertexId> predecessor_set(const PathCollection& c);

/// General predecessors of an anchor vertex in a finished solution: the
/// anchor itself plus the transitive closure of the predecessor relation.
struct PredecessorClosure {
  VertexId anchor = kNoVertex;
  std::vector<VertexId> members;                          // sorted, contains anchor
  std::map<VertexId, std::vector<VertexId>> predecessors;  // member -> V(S_r,member)

  bool contains(VertexId v) const;
};

PredecessorClosure predecessor_closure(const SsKsspSolution& solution, VertexId v);

}  // namespace ksssp
