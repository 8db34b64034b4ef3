#include "ksssp/solvers.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ksssp {

namespace {

void validate(const Graph& g, VertexId r, std::size_t k) {
  if (!g.contains(r)) throw std::invalid_argument("root " + std::to_string(r) + " out of range");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

// Hook plumbing shared by the queue-driven solvers.
class Instrument {
 public:
  Instrument(const RunHooks& hooks, SolverState& state) : hooks_(hooks), state_(state) {}

  void dequeued(const Path& p) {
    const std::uint64_t n = ++state_.stats.dequeues;
    if (hooks_.on_dequeue) hooks_.on_dequeue(p);
    if (n % kPollInterval == 0) poll();
    if (hooks_.on_progress && hooks_.progress_interval && n % hooks_.progress_interval == 0) {
      hooks_.on_progress(n, state_.unsaturated_count());
    }
  }

  void enqueued(const Path& p, Insertion kind, std::size_t queue_size) {
    if (kind == Insertion::normal) ++state_.stats.normal_insertions;
    else ++state_.stats.exceptional_insertions;
    state_.stats.peak_queue_size = std::max(state_.stats.peak_queue_size, queue_size);
    if (hooks_.on_enqueue) hooks_.on_enqueue(p, kind);
  }

  void poll() const {
    if (hooks_.cancelled && hooks_.cancelled()) throw SolverCancelled();
  }

 private:
  static constexpr std::uint64_t kPollInterval = 256;
  const RunHooks& hooks_;
  SolverState& state_;
};

// Marks V(p) so neighbor filtering is O(1) per neighbor.
void mark_path(VisitMarker& marker, const Path& p) {
  marker.reset();
  p.for_each_reversed([&](VertexId v) { marker.mark(v); });
}

enum class Gate { none, pruning };

SsKsspSolution exhaustive_search(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks,
                                 Gate gate) {
  validate(g, r, k);
  SolverState state(g.vertex_count(), r, k);
  Instrument inst(hooks, state);
  RankedPathQueue queue;
  VisitMarker on_path(g.vertex_count());

  queue.push(Path::trivial(r));
  state.stats.peak_queue_size = 1;
  while (!queue.empty() && state.unsaturated_count() > 0) {
    Path pi = queue.pop();
    inst.dequeued(pi);
    const VertexId v = pi.last();

    // The root's own path is never pruned: its closure is just {r}, which
    // would otherwise stop the search before it starts.
    const bool expand = gate == Gate::none || v == r || !pruning_test(v, g, state);
    if (expand) {
      mark_path(on_path, pi);
      for (const Edge& e : g.out_neighbors(v)) {
        if (on_path.marked(e.neighbor)) continue;
        Path next = pi.extend(e.neighbor, e.weight);
        if (queue.push(next)) inst.enqueued(next, Insertion::normal, queue.size());
      }
    }
    if (!state.saturated(v)) state.append(v, std::move(pi));
  }
  return SsKsspSolution::from_state(state);
}

}  // namespace

SsKsspSolution exh_ssksp(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks) {
  return exhaustive_search(g, r, k, hooks, Gate::none);
}

SsKsspSolution pruned_ssksp(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks) {
  return exhaustive_search(g, r, k, hooks, Gate::pruning);
}

bool pruning_test(VertexId v, const Graph& g, SolverState& state) {
  ++state.stats.pruning_calls;
  VisitMarker& seen = state.closure_marker();
  seen.reset();
  std::deque<VertexId> fifo{v};
  seen.mark(v);
  while (!fifo.empty()) {
    const VertexId x = fifo.front();
    fifo.pop_front();
    if (x != state.root() && !state.saturated(x)) return false;
    for (const Edge& e : g.in_neighbors(x)) {
      const VertexId u = e.neighbor;
      if (seen.marked(u) || !state.is_predecessor(x, u)) continue;
      seen.mark(u);
      fifo.push_back(u);
    }
  }
  return true;
}

namespace {

std::vector<Path> super_saturate_impl(VertexId v, SolverState& state, RankedPathQueue& queue,
                                      PkspSubroutine& pksp, Instrument& inst) {
  std::vector<Path> enqueued;
  if (state.super_saturated(v)) return enqueued;
  const VertexId r = state.root();
  const std::size_t k = state.k();

  VisitMarker& seen = state.closure_marker();
  seen.reset();
  std::deque<VertexId> fifo{v};
  seen.mark(v);
  while (!fifo.empty()) {
    const VertexId x = fifo.front();
    fifo.pop_front();
    if (state.super_saturated(x)) continue;

    PathCollection existing{r, x, state.paths(x)};
    PathCollection complete;
    if (state.saturated(x)) {
      complete = std::move(existing);
    } else {
      inst.poll();
      ++state.stats.pksp_calls;
      complete = reconcile_with_existing(pksp.solve(PkspQuery(r, x, k)), existing);
      for (const Path& p : complete.paths) {
        if (state.holds(x, p) || !queue.push(p)) continue;
        inst.enqueued(p, Insertion::exceptional, queue.size());
        enqueued.push_back(p);
      }
    }

    for (const Path& p : complete.paths) {
      p.for_each_reversed([&](VertexId w) {
        if (w == x || state.super_saturated(w) || !seen.mark(w)) return;
        fifo.push_back(w);
      });
    }
    // Marked only after x's collection is complete and queued; marking
    // frontier vertices on discovery would skip their own processing.
    state.mark_super_saturated(x);
  }
  return enqueued;
}

}  // namespace

std::vector<Path> super_saturate(VertexId v, const Graph& g, SolverState& state,
                                 RankedPathQueue& queue, PkspSubroutine& pksp,
                                 const RunHooks& hooks) {
  if (&pksp.graph() != &g) throw std::invalid_argument("pksp subroutine bound to another graph");
  if (!state.saturated(v)) throw std::logic_error("super_saturate on an unsaturated vertex");
  Instrument inst(hooks, state);
  return super_saturate_impl(v, state, queue, pksp, inst);
}

SsKsspSolution bounded_ssksp(const Graph& g, VertexId r, std::size_t k, PkspSubroutine& pksp,
                             const RunHooks& hooks) {
  validate(g, r, k);
  if (&pksp.graph() != &g) throw std::invalid_argument("pksp subroutine bound to another graph");
  SolverState state(g.vertex_count(), r, k);
  Instrument inst(hooks, state);
  RankedPathQueue queue;
  VisitMarker on_path(g.vertex_count());

  state.mark_super_saturated(r);
  queue.push(Path::trivial(r));
  state.stats.peak_queue_size = 1;
  while (!queue.empty() && state.unsaturated_count() > 0) {
    Path pi = queue.pop();
    inst.dequeued(pi);
    const VertexId v = pi.last();

    if (!state.saturated(v)) {
      mark_path(on_path, pi);
      for (const Edge& e : g.out_neighbors(v)) {
        const VertexId u = e.neighbor;
        if (on_path.marked(u) || state.super_saturated(u)) continue;
        Path next = pi.extend(u, e.weight);
        if (queue.push(next)) inst.enqueued(next, Insertion::normal, queue.size());
      }
      state.append(v, std::move(pi));
    } else if (!state.super_saturated(v)) {
      super_saturate_impl(v, state, queue, pksp, inst);
    }
  }
  return SsKsspSolution::from_state(state);
}

SsKsspSolution bounded_ssksp(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks) {
  YenPksp yen(g);
  return bounded_ssksp(g, r, k, yen, hooks);
}

SsKsspSolution ss_yen(const Graph& g, VertexId r, std::size_t k, const RunHooks& hooks) {
  validate(g, r, k);
  SsKsspSolution sol;
  sol.root = r;
  sol.k = k;
  sol.collections.resize(g.vertex_count());
  YenPksp yen(g);
  std::size_t unsaturated = g.vertex_count() - 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sol.collections[v] = PathCollection{r, v, {}};
    if (v == r) continue;
    if (hooks.cancelled && hooks.cancelled()) throw SolverCancelled();
    ++sol.stats.pksp_calls;
    sol.collections[v] = yen.solve(PkspQuery(r, v, k));
    if (sol.collections[v].size() == k) --unsaturated;
    if (hooks.on_progress && hooks.progress_interval &&
        sol.stats.pksp_calls % hooks.progress_interval == 0) {
      hooks.on_progress(sol.stats.pksp_calls, unsaturated);
    }
  }
  return sol;
}

}  // namespace ksssp
