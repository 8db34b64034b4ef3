#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ksssp/graph.hpp"
#include "ksssp/path.hpp"
#include "ksssp/solver_state.hpp"

namespace ksssp {

// Brute-force reference: plain depth-first enumeration of every simple path
// from a root. Shares nothing with the solvers beyond Path itself.

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Number of non-trivial simple paths starting at r, or nullopt once the
/// count exceeds `cap` (the walk stops there).
std::optional<std::size_t> count_simple_paths(const Graph& g, VertexId r, std::size_t cap);

/// All simple paths from r, grouped by end vertex and sorted in the global
/// tie-break order. Entry r holds just the trivial path (r). Throws
/// EnumerationCapExceeded when a counting pre-pass finds more than `cap`.
std::vector<std::vector<Path>> enumerate_all_simple_paths(const Graph& g, VertexId r,
                                                          std::size_t cap = kDefaultEnumerationCap);

/// Exhaustive enumeration truncated to the k lightest paths per vertex,
/// packaged like a solver result (stats left at zero).
SsKsspSolution oracle_top_k(const Graph& g, VertexId r, std::size_t k,
                            std::size_t cap = kDefaultEnumerationCap);

}  // namespace ksssp
