#include <benchmark/benchmark.h>

#include "ksssp/generators.hpp"
#include "ksssp/solvers.hpp"

using namespace ksssp;

namespace {

const Graph& er_graph() {
  static const Graph g = gen_erdos_renyi(300, 3000, false, true, 7);
  return g;
}

const Graph& ba_graph() {
  static const Graph g = gen_barabasi_albert(500, 3, 11);
  return g;
}

template <class Solve>
void run(benchmark::State& state, const Graph& g, Solve solve) {
  const auto k = static_cast<std::size_t>(state.range(0));
  RunStats last;
  for (auto _ : state) {
    auto sol = solve(g, 0, k, RunHooks{});
    benchmark::DoNotOptimize(sol.collections.data());
    last = sol.stats;
  }
  state.counters["pksp_calls"] = static_cast<double>(last.pksp_calls);
  state.counters["insertions"] =
      static_cast<double>(last.normal_insertions + last.exceptional_insertions);
}

auto bounded = [](const Graph& g, VertexId r, std::size_t k, const RunHooks& h) {
  return bounded_ssksp(g, r, k, h);
};

}  // namespace

static void BM_BoundedEr(benchmark::State& state) { run(state, er_graph(), bounded); }
static void BM_SsYenEr(benchmark::State& state) { run(state, er_graph(), ss_yen); }
static void BM_BoundedBa(benchmark::State& state) { run(state, ba_graph(), bounded); }
static void BM_SsYenBa(benchmark::State& state) { run(state, ba_graph(), ss_yen); }

BENCHMARK(BM_BoundedEr)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SsYenEr)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundedBa)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SsYenBa)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

// Exhaustive search on the doubling ladder: time grows as 2^d.
static void BM_ExhAdversarial(benchmark::State& state) {
  auto inst = gen_exh_adversarial(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto sol = exh_ssksp(inst.graph, inst.root, 1);
    benchmark::DoNotOptimize(sol.collections.data());
  }
}
BENCHMARK(BM_ExhAdversarial)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_BoundedAdversarial(benchmark::State& state) {
  auto inst = gen_exh_adversarial(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto sol = bounded_ssksp(inst.graph, inst.root, 1);
    benchmark::DoNotOptimize(sol.collections.data());
  }
}
BENCHMARK(BM_BoundedAdversarial)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);
