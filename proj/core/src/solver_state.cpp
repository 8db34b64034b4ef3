#include "ksssp/solver_state.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace ksssp {

SolverState::SolverState(std::size_t vertex_count, VertexId root, std::size_t k)
    : closure_marker_(vertex_count),
      root_(root),
      k_(k),
      unsaturated_(vertex_count > 0 ? vertex_count - 1 : 0),
      paths_(vertex_count),
      predecessors_(vertex_count),
      super_saturated_(vertex_count, 0) {}

void SolverState::append(VertexId v, Path p) {
  auto& tv = paths_[v];
  if (tv.size() >= k_) throw std::logic_error("append to saturated vertex " + std::to_string(v));
  if (p.last() != v) throw std::logic_error("appended path does not end at its vertex");
  if (!tv.empty() && p.weight() < tv.back().weight()) {
    throw std::logic_error("paths appended out of weight order at vertex " + std::to_string(v));
  }

  std::vector<VertexId> seq = p.vertices();
  seq.pop_back();
  std::sort(seq.begin(), seq.end());
  auto& preds = predecessors_[v];
  std::vector<VertexId> merged;
  merged.reserve(preds.size() + seq.size());
  std::set_union(preds.begin(), preds.end(), seq.begin(), seq.end(), std::back_inserter(merged));
  preds = std::move(merged);

  tv.push_back(std::move(p));
  if (tv.size() == k_ && v != root_) --unsaturated_;
}

bool SolverState::holds(VertexId v, const Path& p) const {
  const auto& tv = paths_[v];
  return std::find(tv.begin(), tv.end(), p) != tv.end();
}

bool SolverState::is_predecessor(VertexId x, VertexId u) const {
  const auto& preds = predecessors_[x];
  return std::binary_search(preds.begin(), preds.end(), u);
}

std::vector<Profile> SsKsspSolution::profiles() const {
  std::vector<Profile> out;
  out.reserve(collections.size());
  for (const auto& c : collections) out.push_back(profile(c));
  return out;
}

SsKsspSolution SsKsspSolution::from_state(const SolverState& state) {
  SsKsspSolution sol;
  sol.root = state.root();
  sol.k = state.k();
  sol.stats = state.stats;
  sol.collections.resize(state.vertex_count());
  for (VertexId v = 0; v < state.vertex_count(); ++v) {
    sol.collections[v].source = state.root();
    sol.collections[v].target = v;
    if (v != state.root()) sol.collections[v].paths = state.paths(v);
  }
  return sol;
}

}  // namespace ksssp
