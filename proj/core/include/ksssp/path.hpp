#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksssp/graph.hpp"

namespace ksssp {

class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable vertex sequence with cached weight and fingerprint.
///
/// A path is a handle to the node holding its last vertex; every node points
/// at the node of its one-shorter prefix. Extending a path allocates exactly
/// one node and shares the whole prefix, so a search that enqueues N paths
/// uses O(N) memory regardless of path length.
///
/// The weight is accumulated left to right along the extension chain. Any two
/// paths with the same vertex sequence built by extension from the same start
/// therefore carry bit-identical weights.
class Path {
 public:
  /// Single-vertex path (v), weight 0.
  static Path trivial(VertexId v);

  /// Builds the path by successive extension. Throws PathError if `vertices`
  /// is empty or a consecutive pair is not an edge of `g`.
  static Path from_vertices(const Graph& g, std::span<const VertexId> vertices);

  /// P + (u). Throws PathError if (last(), u) is not an edge of `g`.
  Path extend(const Graph& g, VertexId u) const;

  /// P + (u) with the edge weight supplied by the caller (hot loops that
  /// already hold the adjacency entry).
  Path extend(VertexId u, Weight edge_weight) const;

  VertexId first() const;
  VertexId last() const { return node_->vertex; }
  Weight weight() const { return node_->weight; }
  /// Number of vertices (edges + 1).
  std::size_t size() const { return node_->length; }
  std::uint64_t key() const { return node_->key; }

  std::vector<VertexId> vertices() const;
  /// Calls `fn(v)` for every vertex, last to first.
  template <typename Fn>
  void for_each_reversed(Fn&& fn) const {
    for (const Node* n = node_.get(); n != nullptr; n = n->parent.get()) fn(n->vertex);
  }

  /// The prefix with one vertex fewer; throws PathError on a trivial path.
  Path parent() const;

  bool contains(VertexId u) const;
  bool is_simple() const;
  bool is_prefix_of(const Path& other) const;

  friend bool operator==(const Path& a, const Path& b);

  /// Global tie-break order: weight, then vertex count, then lexicographic
  /// vertex sequence. Total on sequences.
  friend std::weak_ordering operator<=>(const Path& a, const Path& b);

 private:
  struct Node {
    VertexId vertex;
    std::uint32_t length;
    Weight weight;
    std::uint64_t key;
    std::shared_ptr<Node> parent;

    Node(VertexId v, std::uint32_t len, Weight w, std::uint64_t k, std::shared_ptr<Node> p)
        : vertex(v), length(len), weight(w), key(k), parent(std::move(p)) {}
    ~Node();
  };

  explicit Path(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  static bool same_sequence(const Node* x, const Node* y);

  std::shared_ptr<Node> node_;
};

/// P1 + P2. Throws PathError unless last(P1) == first(P2). The result need
/// not be simple.
Path concat(const Path& p1, const Path& p2, const Graph& g);

inline bool is_simple(const Path& p) { return p.is_simple(); }
inline bool contains_vertex(const Path& p, VertexId u) { return p.contains(u); }
inline bool is_prefix(const Path& p1, const Path& p2) { return p1.is_prefix_of(p2); }

/// Hash and equality for unordered containers: fingerprint first, full
/// sequence comparison on fingerprint match.
struct PathKeyHash {
  std::size_t operator()(const Path& p) const { return static_cast<std::size_t>(p.key()); }
};
struct PathSequenceEqual {
  bool operator()(const Path& a, const Path& b) const { return a == b; }
};

/// Shortest representation that round-trips to the same double.
std::string format_weight(Weight w);

/// `<weight>\t<v0>-<v1>-...-<vk>`
std::string render_path(const Path& p);

}  // namespace ksssp
