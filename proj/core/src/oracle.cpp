#include "ksssp/oracle.hpp"

#include <algorithm>
#include <string>

namespace ksssp {

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t cap)
    : std::runtime_error("simple-path enumeration exceeds the cap of " + std::to_string(cap) +
                         " paths"),
      cap_(cap) {}

std::optional<std::size_t> count_simple_paths(const Graph& g, VertexId r, std::size_t cap) {
  if (!g.contains(r)) throw std::out_of_range("root out of range");
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<std::pair<VertexId, std::size_t>> stack{{r, 0}};
  on_path[r] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto adj = g.out_neighbors(v);
    if (pos == adj.size()) {
      on_path[v] = 0;
      stack.pop_back();
      continue;
    }
    const VertexId u = adj[pos++].neighbor;
    if (on_path[u]) continue;
    if (++count > cap) return std::nullopt;
    on_path[u] = 1;
    stack.push_back({u, 0});
  }
  return count;
}

std::vector<std::vector<Path>> enumerate_all_simple_paths(const Graph& g, VertexId r,
                                                          std::size_t cap) {
  if (!count_simple_paths(g, r, cap)) throw EnumerationCapExceeded(cap);

  std::vector<std::vector<Path>> out(g.vertex_count());
  std::vector<char> on_path(g.vertex_count(), 0);
  struct Frame {
    Path path;
    std::size_t pos;
  };
  std::vector<Frame> stack;
  stack.push_back({Path::trivial(r), 0});
  on_path[r] = 1;
  out[r].push_back(stack.back().path);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const VertexId v = top.path.last();
    auto adj = g.out_neighbors(v);
    if (top.pos == adj.size()) {
      on_path[v] = 0;
      stack.pop_back();
      continue;
    }
    const Edge e = adj[top.pos++];
    if (on_path[e.neighbor]) continue;
    Path next = top.path.extend(e.neighbor, e.weight);
    out[e.neighbor].push_back(next);
    on_path[e.neighbor] = 1;
    stack.push_back({std::move(next), 0});
  }
  for (auto& paths : out) std::sort(paths.begin(), paths.end());
  return out;
}

SsKsspSolution oracle_top_k(const Graph& g, VertexId r, std::size_t k, std::size_t cap) {
  auto all = enumerate_all_simple_paths(g, r, cap);
  SsKsspSolution sol;
  sol.root = r;
  sol.k = k;
  sol.collections.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sol.collections[v].source = r;
    sol.collections[v].target = v;
    if (v == r) continue;
    auto& paths = all[v];
    if (paths.size() > k) paths.resize(k, paths.front());
    sol.collections[v].paths = std::move(paths);
  }
  return sol;
}

}  // namespace ksssp
