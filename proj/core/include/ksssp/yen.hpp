#pragma once

#include <memory>
#include <string_view>

#include "ksssp/graph.hpp"
#include "ksssp/profile.hpp"
#include "ksssp/shortest_paths.hpp"

namespace ksssp {

/// Single-pair query; constructing one validates source != target and k >= 1.
struct PkspQuery {
  VertexId source;
  VertexId target;
  std::size_t k;

  PkspQuery(VertexId s, VertexId t, std::size_t k);
};

/// Pluggable single-pair top-k simple shortest paths solver.
///
/// Implementations must return min(k, #simple s-t paths) distinct simple
/// paths in non-decreasing weight order, built by extension from (source) so
/// that weights agree bit-for-bit with paths grown by the single-source
/// solvers. An unreachable target yields an empty collection.
class PkspSubroutine {
 public:
  virtual ~PkspSubroutine() = default;
  virtual PathCollection solve(const PkspQuery& query) = 0;
  virtual std::string_view name() const = 0;
  virtual const Graph& graph() const = 0;
};

/// Yen's algorithm. Spur searches run on the original graph with root-path
/// vertices and already-used deviation edges masked out; candidates are kept
/// in the global tie-break order and trimmed to the number still needed.
class YenPksp final : public PkspSubroutine {
 public:
  explicit YenPksp(const Graph& g) : search_(g) {}

  PathCollection solve(const PkspQuery& query) override;
  std::string_view name() const override { return "yen"; }
  const Graph& graph() const override { return search_.graph(); }

 private:
  MaskedSearch search_;
};

/// One-shot convenience wrapper around YenPksp. Throws std::out_of_range for
/// endpoints outside the graph.
PathCollection yen_pksp(const Graph& g, const PkspQuery& query);

/// Returns a collection with the same profile as `s` that contains every path
/// of `t`, by swapping weight-tied entries of `s` for the entries of `t` it is
/// missing. `t` must be a ranked prefix of some feasible collection for the
/// same endpoints; a violation throws std::logic_error (a solver bug, not a
/// user error).
PathCollection reconcile_with_existing(const PathCollection& s, const PathCollection& t);

}  // namespace ksssp
