#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ksssp/graph.hpp"

namespace ksssp {

/// Largest number of edges a simple graph on n vertices can hold.
std::size_t max_simple_edges(std::size_t n, bool directed);

/// Uniform G(n, m): exactly m distinct non-loop edges, deterministic in `seed`.
/// Weighted graphs get integer weights drawn uniformly from [1, 10].
/// Throws GraphError when m exceeds max_simple_edges(n, directed).
Graph gen_erdos_renyi(std::size_t n, std::size_t m, bool weighted, bool directed,
                      std::uint64_t seed);

/// Undirected, unweighted preferential attachment. Starts from a complete
/// core on attach+1 vertices; every later vertex links to `attach` distinct
/// existing vertices chosen proportionally to degree. Requires 1 <= attach < n.
Graph gen_barabasi_albert(std::size_t n, std::size_t attach, std::uint64_t seed);

/// A generated worst-case instance with its root and named landmark vertices.
struct AdversarialInstance {
  Graph graph;
  VertexId root = 0;
  std::vector<VertexId> targets;
  std::map<std::string, VertexId> named;
};

/// Ladder that makes exhaustive search enumerate 2^d root-to-c_d paths.
///
/// Undirected and unweighted. Root r = 0; stage i in [1, d] holds two parallel
/// vertices a_i, b_i, both adjacent to the previous junction (r for i = 1) and
/// to junction c_i; a terminal v hangs off c_d. `targets` lists c_1..c_d, v.
/// Names: "r", "a<i>", "b<i>", "c<i>", "v".
AdversarialInstance gen_exh_adversarial(std::size_t d);

/// Ladder with a heavy detour that defeats predecessor-closure pruning.
///
/// Undirected, weighted. r is adjacent to x1, x2. For i in [1, d] the pair
/// (x_{2i-1}, x_{2i}) is adjacent to c_i and so is the pair (x_{2i+1}, x_{2i+2});
/// the last pair is also adjacent to v. Ladder edges weigh 1. A chain of 2d
/// unit edges over fresh vertices ("red path") joins v back to x1, so the
/// detour weighs 2d. `targets` holds v. Names: "r", "x<j>", "c<i>", "v",
/// "red<j>" for the chain interior.
AdversarialInstance gen_pruned_adversarial(std::size_t d);

}  // namespace ksssp
