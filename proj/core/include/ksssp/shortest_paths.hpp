#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ksssp/graph.hpp"
#include "ksssp/path.hpp"

namespace ksssp {

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();

struct ShortestPathTree {
  VertexId root = kNoVertex;
  std::vector<Weight> dist;      // kInfinity when unreachable
  std::vector<VertexId> parent;  // kNoVertex for the root and unreachable vertices

  bool reachable(VertexId v) const { return dist[v] != kInfinity; }
  /// Root-to-v tree path, or nullopt when v is unreachable.
  std::optional<Path> path_to(const Graph& g, VertexId v) const;
};

/// Exact single-source distances: Dijkstra on weighted graphs, breadth-first
/// search on unweighted ones. Throws std::out_of_range for a bad source.
ShortestPathTree shortest_path_tree(const Graph& g, VertexId source);

/// Reusable single-pair shortest path search over a graph with some vertices
/// and edges masked out. Scratch arrays are stamped per query, so a search
/// costs only what it touches.
class MaskedSearch {
 public:
  explicit MaskedSearch(const Graph& g);

  /// Drops all blocked vertices and edges.
  void clear_mask();
  void block_vertex(VertexId v);
  void block_edge(VertexId from, VertexId to);

  /// Vertex sequence of a shortest unmasked source-target path, or nullopt.
  /// The source itself must not be blocked.
  std::optional<std::vector<VertexId>> find(VertexId source, VertexId target);

  const Graph& graph() const { return *graph_; }

 private:
  bool edge_blocked(VertexId from, VertexId to) const;

  const Graph* graph_;
  std::uint32_t mask_epoch_ = 1;
  std::uint32_t search_epoch_ = 0;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::uint32_t> has_blocked_out_;
  std::vector<std::pair<VertexId, VertexId>> blocked_edges_;
  std::vector<std::uint32_t> seen_;
  std::vector<Weight> dist_;
  std::vector<VertexId> parent_;
  std::vector<std::pair<Weight, VertexId>> heap_;
  std::vector<VertexId> fifo_;
};

}  // namespace ksssp
