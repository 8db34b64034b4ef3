#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksssp {

using VertexId = std::uint32_t;
using Weight = double;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// One adjacency entry: the neighbor at the other end and the edge weight.
struct Edge {
  VertexId neighbor;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge as supplied to the graph builder. For undirected graphs each edge
/// is given once and mirrored internally.
struct EdgeSpec {
  VertexId from;
  VertexId to;
  Weight weight = 1.0;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple graph with non-negative edge weights.
///
/// Out- and in-adjacency are stored in CSR form and sorted by neighbor id, so
/// every traversal visits neighbors in a fixed order. Undirected graphs store
/// both orientations of each edge; `edge_count()` still reports the number of
/// undirected edges.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph. Throws GraphError on out-of-range ids,
  /// self-loops, duplicate edges, or negative / non-finite weights. When
  /// `weighted` is false every weight is forced to 1.
  static Graph from_edges(std::size_t vertex_count, std::span<const EdgeSpec> edges,
                          bool directed, bool weighted);

  std::size_t vertex_count() const { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t arc_count() const { return out_edges_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  /// N+(v) with weights, sorted by neighbor id. Throws std::out_of_range.
  std::span<const Edge> out_neighbors(VertexId v) const;
  /// N-(v) with weights, sorted by neighbor id. Throws std::out_of_range.
  std::span<const Edge> in_neighbors(VertexId v) const;

  std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }

  std::optional<Weight> edge_weight(VertexId from, VertexId to) const;
  bool has_edge(VertexId from, VertexId to) const { return edge_weight(from, to).has_value(); }

  /// Edge list in canonical order (by source, then target). Undirected edges
  /// appear once with from < to.
  std::vector<EdgeSpec> edges() const;

  bool contains(VertexId v) const { return v < vertex_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> out_offsets_;
  std::vector<Edge> out_edges_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Edge> in_edges_;
  std::size_t edge_count_ = 0;
  bool directed_ = true;
  bool weighted_ = true;
};

/// G[keep] with dense re-indexing. `to_original[i]` is the original id of new
/// vertex i; `to_subgraph[v]` is the new id of original v or kNoVertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;
  std::vector<VertexId> to_subgraph;
};

/// Keeps vertices in ascending original-id order. Duplicate ids in `keep` are
/// ignored; out-of-range ids throw std::out_of_range.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

/// Vertices of the largest connected component (strongly connected component
/// when the graph is directed). Ties go to the component holding the smallest
/// vertex id. Result is sorted.
std::vector<VertexId> largest_component(const Graph& g);

}  // namespace ksssp
