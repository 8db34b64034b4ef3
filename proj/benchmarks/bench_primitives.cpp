#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ksssp/generators.hpp"
#include "ksssp/ranked_queue.hpp"
#include "ksssp/shortest_paths.hpp"
#include "ksssp/yen.hpp"

using namespace ksssp;

static void BM_ShortestPathTree(benchmark::State& state) {
  Graph g = gen_erdos_renyi(static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(0)) * 10, true, true, 3);
  for (auto _ : state) {
    auto t = shortest_path_tree(g, 0);
    benchmark::DoNotOptimize(t.dist.data());
  }
}
BENCHMARK(BM_ShortestPathTree)->Arg(1000)->Arg(10000);

static void BM_YenPair(benchmark::State& state) {
  Graph g = gen_erdos_renyi(1000, 10000, true, true, 5);
  YenPksp yen(g);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto c = yen.solve(PkspQuery(0, 999, k));
    benchmark::DoNotOptimize(c.paths.data());
  }
}
BENCHMARK(BM_YenPair)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

// Push a batch of random one-hop paths, then drain.
static void BM_QueuePushPop(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph g = gen_erdos_renyi(n, n * 8, true, true, 9);
  std::vector<Path> paths;
  for (VertexId u = 0; u < n; ++u) {
    for (const auto& e : g.out_neighbors(u)) paths.push_back(Path::trivial(u).extend(g, e.neighbor));
  }
  std::shuffle(paths.begin(), paths.end(), std::mt19937_64(1));
  for (auto _ : state) {
    RankedPathQueue q;
    for (const Path& p : paths) q.push(p);
    while (!q.empty()) benchmark::DoNotOptimize(q.pop());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_QueuePushPop)->Arg(1000)->Arg(10000);
