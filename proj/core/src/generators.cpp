#include "ksssp/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace ksssp {

std::size_t max_simple_edges(std::size_t n, bool directed) {
  if (n < 2) return 0;
  return directed ? n * (n - 1) : n * (n - 1) / 2;
}

namespace {

std::uint64_t encode(VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; }

}  // namespace

Graph gen_erdos_renyi(std::size_t n, std::size_t m, bool weighted, bool directed,
                      std::uint64_t seed) {
  if (n == 0) throw GraphError("erdos-renyi: n must be >= 1");
  const std::size_t max_edges = max_simple_edges(n, directed);
  if (m > max_edges) {
    throw GraphError("erdos-renyi: m=" + std::to_string(m) + " exceeds " +
                     std::to_string(max_edges) + " possible edges");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));

  // Sample whichever of the edge set or its complement is smaller.
  const bool sample_complement = m > max_edges / 2;
  const std::size_t target = sample_complement ? max_edges - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(target * 2);
  while (chosen.size() < target) {
    VertexId u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!directed && u > v) std::swap(u, v);
    chosen.insert(encode(u, v));
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  if (sample_complement) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = directed ? 0 : u + 1; v < n; ++v) {
        if (u != v && !chosen.count(encode(u, v))) edges.push_back({u, v, 1.0});
      }
    }
  } else {
    std::vector<std::uint64_t> sorted(chosen.begin(), chosen.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::uint64_t code : sorted) {
      edges.push_back({static_cast<VertexId>(code >> 32), static_cast<VertexId>(code), 1.0});
    }
  }

  if (weighted) {
    std::uniform_int_distribution<int> weight(1, 10);
    for (EdgeSpec& e : edges) e.weight = weight(rng);
  }
  return Graph::from_edges(n, edges, directed, weighted);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t attach, std::uint64_t seed) {
  if (attach < 1 || attach >= n) {
    throw GraphError("barabasi-albert: need 1 <= attach < n (attach=" + std::to_string(attach) +
                     ", n=" + std::to_string(n) + ")");
  }
  std::mt19937_64 rng(seed);
  std::vector<EdgeSpec> edges;
  std::vector<VertexId> endpoints;  // each vertex repeated once per incident edge

  const VertexId core = static_cast<VertexId>(attach + 1);
  for (VertexId u = 0; u < core; ++u) {
    for (VertexId v = u + 1; v < core; ++v) {
      edges.push_back({u, v, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<VertexId> targets;
  for (VertexId v = core; v < n; ++v) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < attach) {
      VertexId t = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (VertexId t : targets) {
      edges.push_back({t, v, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges, /*directed=*/false, /*weighted=*/false);
}

AdversarialInstance gen_exh_adversarial(std::size_t d) {
  if (d < 1) throw GraphError("exh-adversarial: d must be >= 1");
  AdversarialInstance inst;
  const std::size_t n = 3 * d + 2;
  std::vector<EdgeSpec> edges;
  inst.named["r"] = 0;
  VertexId junction = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    const auto a = static_cast<VertexId>(3 * (i - 1) + 1);
    const auto b = static_cast<VertexId>(a + 1);
    const auto c = static_cast<VertexId>(a + 2);
    edges.push_back({junction, a, 1.0});
    edges.push_back({junction, b, 1.0});
    edges.push_back({a, c, 1.0});
    edges.push_back({b, c, 1.0});
    const std::string idx = std::to_string(i);
    inst.named["a" + idx] = a;
    inst.named["b" + idx] = b;
    inst.named["c" + idx] = c;
    inst.targets.push_back(c);
    junction = c;
  }
  const auto v = static_cast<VertexId>(3 * d + 1);
  edges.push_back({junction, v, 1.0});
  inst.named["v"] = v;
  inst.targets.push_back(v);
  inst.root = 0;
  inst.graph = Graph::from_edges(n, edges, /*directed=*/false, /*weighted=*/false);
  return inst;
}

AdversarialInstance gen_pruned_adversarial(std::size_t d) {
  if (d < 1) throw GraphError("pruned-adversarial: d must be >= 1");
  AdversarialInstance inst;
  auto x = [](std::size_t j) { return static_cast<VertexId>(j); };  // j in [1, 2d+2]
  auto c = [d](std::size_t i) { return static_cast<VertexId>(2 * d + 2 + i); };
  const auto v = static_cast<VertexId>(3 * d + 3);
  const auto red_first = static_cast<VertexId>(3 * d + 4);
  const std::size_t red_interior = 2 * d - 1;
  const std::size_t n = red_first + red_interior;

  std::vector<EdgeSpec> edges;
  edges.push_back({0, x(1), 1.0});
  edges.push_back({0, x(2), 1.0});
  for (std::size_t i = 1; i <= d; ++i) {
    edges.push_back({x(2 * i - 1), c(i), 1.0});
    edges.push_back({x(2 * i), c(i), 1.0});
    edges.push_back({c(i), x(2 * i + 1), 1.0});
    edges.push_back({c(i), x(2 * i + 2), 1.0});
  }
  edges.push_back({x(2 * d + 1), v, 1.0});
  edges.push_back({x(2 * d + 2), v, 1.0});

  VertexId prev = v;
  for (std::size_t j = 0; j < red_interior; ++j) {
    const auto red = static_cast<VertexId>(red_first + j);
    edges.push_back({prev, red, 1.0});
    inst.named["red" + std::to_string(j + 1)] = red;
    prev = red;
  }
  edges.push_back({prev, x(1), 1.0});

  inst.named["r"] = 0;
  for (std::size_t j = 1; j <= 2 * d + 2; ++j) inst.named["x" + std::to_string(j)] = x(j);
  for (std::size_t i = 1; i <= d; ++i) inst.named["c" + std::to_string(i)] = c(i);
  inst.named["v"] = v;
  inst.root = 0;
  inst.targets.push_back(v);
  inst.graph = Graph::from_edges(n, edges, /*directed=*/false, /*weighted=*/true);
  return inst;
}

}  // namespace ksssp
