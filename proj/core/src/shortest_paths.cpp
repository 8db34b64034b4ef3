#include "ksssp/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace ksssp {

std::optional<Path> ShortestPathTree::path_to(const Graph& g, VertexId v) const {
  if (!reachable(v)) return std::nullopt;
  std::vector<VertexId> seq;
  for (VertexId x = v; x != kNoVertex; x = parent[x]) seq.push_back(x);
  std::reverse(seq.begin(), seq.end());
  return Path::from_vertices(g, seq);
}

ShortestPathTree shortest_path_tree(const Graph& g, VertexId source) {
  if (!g.contains(source)) {
    throw std::out_of_range("source " + std::to_string(source) + " out of range");
  }
  const std::size_t n = g.vertex_count();
  ShortestPathTree t;
  t.root = source;
  t.dist.assign(n, kInfinity);
  t.parent.assign(n, kNoVertex);
  t.dist[source] = 0;

  if (!g.weighted()) {
    std::vector<VertexId> fifo{source};
    for (std::size_t head = 0; head < fifo.size(); ++head) {
      VertexId u = fifo[head];
      for (const Edge& e : g.out_neighbors(u)) {
        if (t.dist[e.neighbor] != kInfinity) continue;
        t.dist[e.neighbor] = t.dist[u] + 1;
        t.parent[e.neighbor] = u;
        fifo.push_back(e.neighbor);
      }
    }
    return t;
  }

  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > t.dist[u]) continue;
    for (const Edge& e : g.out_neighbors(u)) {
      Weight nd = d + e.weight;
      if (nd < t.dist[e.neighbor]) {
        t.dist[e.neighbor] = nd;
        t.parent[e.neighbor] = u;
        pq.push({nd, e.neighbor});
      }
    }
  }
  return t;
}

MaskedSearch::MaskedSearch(const Graph& g)
    : graph_(&g),
      blocked_(g.vertex_count(), 0),
      has_blocked_out_(g.vertex_count(), 0),
      seen_(g.vertex_count(), 0),
      dist_(g.vertex_count(), kInfinity),
      parent_(g.vertex_count(), kNoVertex) {}

void MaskedSearch::clear_mask() {
  ++mask_epoch_;
  blocked_edges_.clear();
}

void MaskedSearch::block_vertex(VertexId v) { blocked_[v] = mask_epoch_; }

void MaskedSearch::block_edge(VertexId from, VertexId to) {
  has_blocked_out_[from] = mask_epoch_;
  blocked_edges_.push_back({from, to});
}

bool MaskedSearch::edge_blocked(VertexId from, VertexId to) const {
  if (has_blocked_out_[from] != mask_epoch_) return false;
  return std::find(blocked_edges_.begin(), blocked_edges_.end(), std::pair{from, to}) !=
         blocked_edges_.end();
}

std::optional<std::vector<VertexId>> MaskedSearch::find(VertexId source, VertexId target) {
  const Graph& g = *graph_;
  ++search_epoch_;
  auto touch = [&](VertexId v) {
    if (seen_[v] != search_epoch_) {
      seen_[v] = search_epoch_;
      dist_[v] = kInfinity;
      parent_[v] = kNoVertex;
    }
  };
  touch(source);
  dist_[source] = 0;
  bool found = source == target;

  if (!found && !g.weighted()) {
    fifo_.clear();
    fifo_.push_back(source);
    for (std::size_t head = 0; head < fifo_.size() && !found; ++head) {
      VertexId u = fifo_[head];
      for (const Edge& e : g.out_neighbors(u)) {
        VertexId w = e.neighbor;
        if (blocked_[w] == mask_epoch_ || edge_blocked(u, w)) continue;
        touch(w);
        if (dist_[w] != kInfinity) continue;
        dist_[w] = dist_[u] + 1;
        parent_[w] = u;
        if (w == target) {
          found = true;
          break;
        }
        fifo_.push_back(w);
      }
    }
  } else if (!found) {
    auto cmp = std::greater<std::pair<Weight, VertexId>>{};
    heap_.clear();
    heap_.push_back({0, source});
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), cmp);
      auto [d, u] = heap_.back();
      heap_.pop_back();
      if (d > dist_[u]) continue;
      if (u == target) {
        found = true;
        break;
      }
      for (const Edge& e : g.out_neighbors(u)) {
        VertexId w = e.neighbor;
        if (blocked_[w] == mask_epoch_ || edge_blocked(u, w)) continue;
        touch(w);
        Weight nd = d + e.weight;
        if (nd < dist_[w]) {
          dist_[w] = nd;
          parent_[w] = u;
          heap_.push_back({nd, w});
          std::push_heap(heap_.begin(), heap_.end(), cmp);
        }
      }
    }
  }

  if (!found) return std::nullopt;
  std::vector<VertexId> seq;
  for (VertexId x = target; x != kNoVertex; x = parent_[x]) seq.push_back(x);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace ksssp
