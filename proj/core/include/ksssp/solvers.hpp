#pragma once

#include <cstddef>
#include <vector>

#include "ksssp/graph.hpp"
#include "ksssp/ranked_queue.hpp"
#include "ksssp/solver_state.hpp"
#include "ksssp/yen.hpp"

namespace ksssp {

// Single-source top-k simple shortest paths.
//
// All solvers return, for every v != r, min(k, #simple r-v paths) simple
// paths in non-decreasing weight order; per-vertex profiles agree across
// solvers. They differ only in how much of the path space they explore.
// Invalid r (out of range) or k == 0 throws std::invalid_argument.

/// Exhaustive best-first search over simple paths from r. Stops once every
/// vertex other than r holds k paths or the queue runs dry; exponential in the
/// worst case.
SsKsspSolution exh_ssksp(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks = {});

/// Exhaustive search gated by pruning_test: a dequeued path is extended only
/// if some general predecessor of its end vertex is still unsaturated.
/// Still exponential in the worst case.
SsKsspSolution pruned_ssksp(const Graph& g, VertexId r, std::size_t k,
                            const RunHooks& hooks = {});

/// Polynomial single-source search. A path reaching a saturated,
/// not-yet-super-saturated vertex v triggers super_saturate(v), which
/// completes the collections of v's unsaturated general predecessors through
/// `pksp` and stops all further extension into them. `pksp` must be bound to
/// `g`.
SsKsspSolution bounded_ssksp(const Graph& g, VertexId r, std::size_t k, PkspSubroutine& pksp,
                             const RunHooks& hooks = {});

/// bounded_ssksp with Yen's algorithm as the single-pair subroutine.
SsKsspSolution bounded_ssksp(const Graph& g, VertexId r, std::size_t k,
                             const RunHooks& hooks = {});

/// Baseline: an independent Yen query for every v != r.
SsKsspSolution ss_yen(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks = {});

/// True iff every general predecessor of v reachable through the current
/// collections (breadth-first over in-edges (u, x) with u in V(T_x)) is
/// saturated; the root is exempt.
bool pruning_test(VertexId v, const Graph& g, SolverState& state);

/// Super-saturates v and the general predecessors reached from it.
///
/// Breadth-first from v over V(S_rx): for each reached x that is not yet
/// super-saturated, S_rx is T_x when x is saturated and otherwise the
/// subroutine's answer reconciled to contain T_x. Paths of S_rx missing from
/// T_x and from the queue are enqueued as exceptional insertions, and x is
/// marked super-saturated once processed. Returns the enqueued paths.
std::vector<Path> super_saturate(VertexId v, const Graph& g, SolverState& state,
                                 RankedPathQueue& queue, PkspSubroutine& pksp,
                                 const RunHooks& hooks = {});

}  // namespace ksssp
