#include "ksssp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ksssp {

namespace {

void build_csr(std::size_t n, std::vector<std::pair<VertexId, Edge>>& arcs,
               std::vector<std::size_t>& offsets, std::vector<Edge>& edges) {
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.neighbor < b.second.neighbor;
  });
  offsets.assign(n + 1, 0);
  for (const auto& [from, e] : arcs) ++offsets[from + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  edges.clear();
  edges.reserve(arcs.size());
  for (const auto& [from, e] : arcs) edges.push_back(e);
}

std::string edge_name(const EdgeSpec& e) {
  return "(" + std::to_string(e.from) + ", " + std::to_string(e.to) + ")";
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const EdgeSpec> edges,
                        bool directed, bool weighted) {
  if (vertex_count >= kNoVertex) throw GraphError("vertex count too large");

  std::vector<std::pair<VertexId, Edge>> out_arcs;
  out_arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const EdgeSpec& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count) {
      throw GraphError("vertex id out of range in edge " + edge_name(e));
    }
    if (e.from == e.to) throw GraphError("self-loop " + edge_name(e));
    const Weight w = weighted ? e.weight : 1.0;
    if (!std::isfinite(w) || w < 0) throw GraphError("invalid weight on edge " + edge_name(e));
    out_arcs.push_back({e.from, Edge{e.to, w}});
    if (!directed) out_arcs.push_back({e.to, Edge{e.from, w}});
  }

  Graph g;
  g.directed_ = directed;
  g.weighted_ = weighted;
  g.edge_count_ = edges.size();

  std::vector<std::pair<VertexId, Edge>> in_arcs;
  in_arcs.reserve(out_arcs.size());
  for (const auto& [from, e] : out_arcs) in_arcs.push_back({e.neighbor, Edge{from, e.weight}});

  build_csr(vertex_count, out_arcs, g.out_offsets_, g.out_edges_);
  build_csr(vertex_count, in_arcs, g.in_offsets_, g.in_edges_);

  for (std::size_t v = 0; v < vertex_count; ++v) {
    for (std::size_t i = g.out_offsets_[v] + 1; i < g.out_offsets_[v + 1]; ++i) {
      if (g.out_edges_[i].neighbor == g.out_edges_[i - 1].neighbor) {
        throw GraphError("duplicate edge " +
                         edge_name({static_cast<VertexId>(v), g.out_edges_[i].neighbor}));
      }
    }
  }
  return g;
}

std::span<const Edge> Graph::out_neighbors(VertexId v) const {
  if (!contains(v)) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  return {out_edges_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Edge> Graph::in_neighbors(VertexId v) const {
  if (!contains(v)) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  return {in_edges_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::optional<Weight> Graph::edge_weight(VertexId from, VertexId to) const {
  if (!contains(from) || !contains(to)) return std::nullopt;
  auto adj = out_neighbors(from);
  auto it = std::lower_bound(adj.begin(), adj.end(), to,
                             [](const Edge& e, VertexId id) { return e.neighbor < id; });
  if (it == adj.end() || it->neighbor != to) return std::nullopt;
  return it->weight;
}

std::vector<EdgeSpec> Graph::edges() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (const Edge& e : out_neighbors(v)) {
      if (directed_ || v < e.neighbor) out.push_back({v, e.neighbor, e.weight});
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  const std::size_t n = g.vertex_count();
  InducedSubgraph sub;
  sub.to_subgraph.assign(n, kNoVertex);
  std::vector<char> kept(n, 0);
  for (VertexId v : keep) {
    if (v >= n) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    kept[v] = 1;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!kept[v]) continue;
    sub.to_subgraph[v] = static_cast<VertexId>(sub.to_original.size());
    sub.to_original.push_back(v);
  }
  std::vector<EdgeSpec> edges;
  for (const EdgeSpec& e : g.edges()) {
    if (kept[e.from] && kept[e.to]) {
      edges.push_back({sub.to_subgraph[e.from], sub.to_subgraph[e.to], e.weight});
    }
  }
  sub.graph = Graph::from_edges(sub.to_original.size(), edges, g.directed(), g.weighted());
  return sub;
}

namespace {

// Iterative Tarjan; returns a component id per vertex.
std::vector<std::size_t> strong_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;  // (vertex, next edge position)
  std::size_t counter = 0, comp_count = 0;

  for (VertexId s = 0; s < n; ++s) {
    if (index[s] != kUnset) continue;
    call.push_back({s, 0});
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto adj = g.out_neighbors(v);
      if (pos < adj.size()) {
        VertexId u = adj[pos++].neighbor;
        if (index[u] == kUnset) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const VertexId done = v;
      call.pop_back();
      if (!call.empty()) {
        VertexId parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
        } while (w != done);
        ++comp_count;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<VertexId> largest_component(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  // Undirected graphs store both orientations, so SCCs coincide with
  // connected components.
  std::vector<std::size_t> comp = strong_components(g);
  std::size_t count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::size_t> size(count, 0);
  for (std::size_t c : comp) ++size[c];
  std::size_t best = comp[0];
  for (VertexId v = 0; v < n; ++v) {
    if (size[comp[v]] > size[best]) best = comp[v];
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (comp[v] == best) out.push_back(v);
  }
  return out;
}

}  // namespace ksssp
