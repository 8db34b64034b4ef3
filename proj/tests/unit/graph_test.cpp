#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "ksssp/generators.hpp"
#include "ksssp/graph.hpp"
#include "ksssp/graph_io.hpp"
#include "reference.hpp"

using namespace ksssp;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

const char* kTriangle = "p ksp 3 3 1 1\n0 1 2.0\n1 2 3.0\n0 2 10.0\n";

std::size_t count_paths_to(const Graph& g, VertexId s, VertexId t) {
  auto all = ref::all_paths(g, s, 10'000'000);
  return all ? (*all)[t].size() : 0;
}

}  // namespace

TEST(Loader, TriangleInstance) {
  Graph g = parse(kTriangle);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.directed());
  EXPECT_TRUE(g.weighted());
  auto out0 = g.out_neighbors(0);
  ASSERT_EQ(out0.size(), 2u);
  EXPECT_EQ(out0[0], (Edge{1, 2.0}));
  EXPECT_EQ(out0[1], (Edge{2, 10.0}));
}

TEST(Loader, UndirectedUnweightedSymmetry) {
  Graph g = parse("p ksp 2 1 0 0\n0 1\n");
  EXPECT_FALSE(g.directed());
  EXPECT_FALSE(g.weighted());
  ASSERT_EQ(g.out_neighbors(0).size(), 1u);
  ASSERT_EQ(g.out_neighbors(1).size(), 1u);
  EXPECT_EQ(g.out_neighbors(0)[0], (Edge{1, 1.0}));
  EXPECT_EQ(g.out_neighbors(1)[0], (Edge{0, 1.0}));
  EXPECT_EQ(g.in_neighbors(0)[0], (Edge{1, 1.0}));
}

TEST(Loader, CommentsAndBlankLines) {
  Graph g = parse("# hello\n\np ksp 2 1 1 1\n# mid\n0 1 4.5\n");
  EXPECT_EQ(g.edge_weight(0, 1), 4.5);
}

TEST(Loader, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("p ksp 2 1 1 1\n0 0 1.0\n"), 2u);     // self-loop
  EXPECT_EQ(parse_error_line("p ksp 2 1 1 1\n0 2 1.0\n"), 2u);     // id out of range
  EXPECT_EQ(parse_error_line("p ksp 2 1 1 1\n0 1 -1\n"), 2u);      // negative weight
  EXPECT_EQ(parse_error_line("p ksp 3 2 1 1\n0 1 1\n\n0 1 2\n"), 4u);  // duplicate
  EXPECT_EQ(parse_error_line("p ksp 2 1 0 0\n0 1\n1 0\n"), 3u);    // too many lines
  EXPECT_EQ(parse_error_line("p ksp 2 1 0 0\n0 1 5\n"), 2u);       // weight on unweighted
  EXPECT_EQ(parse_error_line("q ksp 2 1 0 0\n0 1\n"), 1u);         // header keyword
  EXPECT_EQ(parse_error_line("p ksp 0 0 0 0\n"), 1u);              // n >= 1
  EXPECT_EQ(parse_error_line("p ksp 3 2 0 0\n0 1\n"), 0u);         // missing edge at EOF
}

TEST(Loader, UndirectedDuplicateInReverseOrientation) {
  EXPECT_EQ(parse_error_line("p ksp 2 2 0 0\n0 1\n1 0\n"), 3u);
  EXPECT_NO_THROW(parse("p ksp 2 2 1 0\n0 1\n1 0\n"));
}

TEST(Loader, RoundTripThroughWriter) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = ref::coin_flip_graph(rng, 12, 0.3, trial % 2 == 0, trial % 3 != 0);
    std::ostringstream out;
    write_graph(out, g, {"round trip"});
    EXPECT_EQ(parse(out.str()), g);
  }
}

TEST(Neighbors, IsolatedAndOutOfRange) {
  Graph g = parse("p ksp 3 1 1 1\n0 1 1\n");
  EXPECT_TRUE(g.out_neighbors(2).empty());
  EXPECT_TRUE(g.in_neighbors(0).empty());
  ASSERT_EQ(g.in_neighbors(1).size(), 1u);
  EXPECT_EQ(g.in_neighbors(1)[0].neighbor, 0u);
  EXPECT_THROW(g.out_neighbors(3), std::out_of_range);
  EXPECT_THROW(g.in_neighbors(7), std::out_of_range);
}

TEST(GraphInvariants, TransposeConsistencyOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = ref::coin_flip_graph(rng, 15, 0.25, trial % 2 == 0, true);
    std::multiset<std::tuple<VertexId, VertexId, Weight>> out_arcs, in_arcs;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (const Edge& e : g.out_neighbors(u)) out_arcs.insert({u, e.neighbor, e.weight});
      for (const Edge& e : g.in_neighbors(u)) in_arcs.insert({e.neighbor, u, e.weight});
      auto adj = g.out_neighbors(u);
      EXPECT_TRUE(std::is_sorted(adj.begin(), adj.end(),
                                 [](const Edge& a, const Edge& b) { return a.neighbor < b.neighbor; }));
    }
    EXPECT_EQ(out_arcs, in_arcs);
    if (!g.directed()) {
      for (const auto& [u, v, w] : out_arcs) EXPECT_EQ(g.edge_weight(v, u), w);
    }
  }
}

TEST(GraphBuild, RejectsInvalidEdges) {
  std::vector<EdgeSpec> loop{{0, 0, 1}};
  EXPECT_THROW(Graph::from_edges(2, loop, true, true), GraphError);
  std::vector<EdgeSpec> neg{{0, 1, -2}};
  EXPECT_THROW(Graph::from_edges(2, neg, true, true), GraphError);
  std::vector<EdgeSpec> dup{{0, 1, 1}, {0, 1, 2}};
  EXPECT_THROW(Graph::from_edges(2, dup, true, true), GraphError);
  std::vector<EdgeSpec> unweighted{{0, 1, 7}};
  EXPECT_EQ(Graph::from_edges(2, unweighted, true, false).edge_weight(0, 1), 1.0);
}

TEST(InducedSubgraph, Identity) {
  Graph g = parse(kTriangle);
  auto sub = induced_subgraph(g, std::vector<VertexId>{0, 1, 2});
  EXPECT_EQ(sub.graph, g);
  EXPECT_EQ(sub.to_original, (std::vector<VertexId>{0, 1, 2}));
}

TEST(InducedSubgraph, Singleton) {
  Graph g = parse(kTriangle);
  auto sub = induced_subgraph(g, std::vector<VertexId>{2});
  EXPECT_EQ(sub.graph.vertex_count(), 1u);
  EXPECT_EQ(sub.graph.edge_count(), 0u);
  EXPECT_EQ(sub.to_original[0], 2u);
  EXPECT_EQ(sub.to_subgraph[2], 0u);
  EXPECT_EQ(sub.to_subgraph[0], kNoVertex);
}

TEST(InducedSubgraph, TriangleKeepTwo) {
  Graph g = parse(kTriangle);
  auto sub = induced_subgraph(g, std::vector<VertexId>{0, 1});
  ASSERT_EQ(sub.graph.edge_count(), 1u);
  EXPECT_EQ(sub.graph.edge_weight(0, 1), 2.0);
}

TEST(InducedSubgraph, OutOfRangeKeep) {
  Graph g = parse(kTriangle);
  EXPECT_THROW(induced_subgraph(g, std::vector<VertexId>{0, 3}), std::out_of_range);
}

TEST(InducedSubgraph, EdgeCountMatchesFilterOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = ref::coin_flip_graph(rng, 14, 0.3, trial % 2 == 0, true);
    std::vector<VertexId> keep;
    std::bernoulli_distribution pick(0.6);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (pick(rng)) keep.push_back(v);
    std::set<VertexId> ks(keep.begin(), keep.end());
    std::size_t expected = 0;
    for (const auto& e : g.edges()) expected += ks.count(e.from) && ks.count(e.to);
    auto sub = induced_subgraph(g, keep);
    EXPECT_EQ(sub.graph.edge_count(), expected);
    for (const auto& e : sub.graph.edges()) {
      EXPECT_EQ(g.edge_weight(sub.to_original[e.from], sub.to_original[e.to]), e.weight);
    }
  }
}

TEST(LargestComponent, PicksBiggestStrongComponent) {
  // 0->1->2->0 is a 3-cycle; 3<->4 is a 2-cycle; 2->3 links them one way.
  Graph g = parse("p ksp 5 6 1 0\n0 1\n1 2\n2 0\n2 3\n3 4\n4 3\n");
  auto comp = largest_component(g);
  EXPECT_EQ(comp, (std::vector<VertexId>{0, 1, 2}));
  Graph u = parse("p ksp 5 3 0 0\n0 1\n2 3\n3 4\n");
  EXPECT_EQ(largest_component(u), (std::vector<VertexId>{2, 3, 4}));
}

TEST(ErdosRenyi, ForcedSingleEdge) {
  Graph g = gen_erdos_renyi(2, 1, false, false, 99);
  EXPECT_EQ(g.edges(), (std::vector<EdgeSpec>{{0, 1, 1.0}}));
}

TEST(ErdosRenyi, DeterministicPerSeed) {
  EXPECT_EQ(gen_erdos_renyi(100, 300, true, true, 7), gen_erdos_renyi(100, 300, true, true, 7));
  EXPECT_NE(gen_erdos_renyi(100, 300, true, true, 7), gen_erdos_renyi(100, 300, true, true, 8));
}

TEST(ErdosRenyi, ExactEdgeCountNoDuplicatesNoLoops) {
  for (bool directed : {false, true}) {
    Graph g = gen_erdos_renyi(100, 300, true, directed, 7);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : g.edges()) {
      EXPECT_NE(e.from, e.to);
      EXPECT_TRUE(seen.insert({e.from, e.to}).second);
      EXPECT_GE(e.weight, 1.0);
      EXPECT_LE(e.weight, 10.0);
      EXPECT_EQ(e.weight, std::floor(e.weight));
    }
    EXPECT_EQ(seen.size(), 300u);
    EXPECT_EQ(g.edge_count(), 300u);
  }
}

TEST(ErdosRenyi, DenseAndInfeasible) {
  EXPECT_EQ(gen_erdos_renyi(10, 45, false, false, 1).edge_count(), 45u);
  EXPECT_EQ(gen_erdos_renyi(10, 80, false, true, 1).edge_count(), 80u);
  EXPECT_THROW(gen_erdos_renyi(10, 46, false, false, 1), GraphError);
  EXPECT_EQ(max_simple_edges(10, true), 90u);
}

TEST(BarabasiAlbert, CoreOnly) {
  Graph g = gen_barabasi_albert(4, 3, 1);
  EXPECT_EQ(g.edge_count(), 6u);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(g.out_degree(v), 3u);
}

TEST(BarabasiAlbert, DeterministicCountedConnected) {
  Graph g = gen_barabasi_albert(500, 3, 42);
  EXPECT_EQ(g, gen_barabasi_albert(500, 3, 42));
  EXPECT_EQ(g.edge_count(), 3u * (500 - 4) + 6);
  EXPECT_FALSE(g.directed());
  EXPECT_EQ(largest_component(g).size(), 500u);
  EXPECT_THROW(gen_barabasi_albert(3, 3, 1), GraphError);
  EXPECT_THROW(gen_barabasi_albert(3, 0, 1), GraphError);
}

TEST(ExhAdversarial, PathCountIsPowerOfTwo) {
  for (std::size_t d = 1; d <= 8; ++d) {
    auto inst = gen_exh_adversarial(d);
    EXPECT_FALSE(inst.graph.directed());
    EXPECT_FALSE(inst.graph.weighted());
    const VertexId cd = inst.named.at("c" + std::to_string(d));
    EXPECT_EQ(count_paths_to(inst.graph, inst.root, cd), std::size_t{1} << d) << "d=" << d;
    EXPECT_EQ(inst.targets.back(), inst.named.at("v"));
  }
  EXPECT_THROW(gen_exh_adversarial(0), GraphError);
}

namespace {

// r->v simple paths that avoid the red chain's interior.
std::size_t ladder_paths_to_v(const AdversarialInstance& inst) {
  std::vector<VertexId> keep;
  for (const auto& [name, id] : inst.named)
    if (name.rfind("red", 0) != 0) keep.push_back(id);
  std::sort(keep.begin(), keep.end());
  auto sub = induced_subgraph(inst.graph, keep);
  return count_paths_to(sub.graph, sub.to_subgraph[inst.root], sub.to_subgraph[inst.named.at("v")]);
}

}  // namespace

TEST(PrunedAdversarial, ShapeAndCounts) {
  for (std::size_t d = 1; d <= 6; ++d) {
    auto inst = gen_pruned_adversarial(d);
    const Graph& g = inst.graph;
    EXPECT_FALSE(g.directed());
    EXPECT_TRUE(g.weighted());
    EXPECT_EQ(ladder_paths_to_v(inst), std::size_t{1} << (d + 1)) << "d=" << d;

    // Red chain: 2d unit edges from v to x1 through 2d-1 fresh vertices.
    std::size_t red = 0;
    for (const auto& [name, id] : inst.named) red += name.rfind("red", 0) == 0;
    EXPECT_EQ(red, 2 * d - 1);

    // r->x1: (r,x1), (r,x2,c1,x1) avoid the chain; the rest use it.
    auto all = ref::all_paths(g, inst.root, 10'000'000);
    ASSERT_TRUE(all);
    const auto& to_x1 = (*all)[inst.named.at("x1")];
    std::size_t through_red = 0;
    for (const auto& p : to_x1) {
      through_red += std::find(p.seq.begin(), p.seq.end(), inst.named.at("v")) != p.seq.end();
    }
    EXPECT_EQ(to_x1.size() - through_red, 2u);
    // Paths through the chain must leave r via x2 (x1 is their end), so only
    // half of the 2^{d+1} ladder paths to v extend to x1.
    EXPECT_EQ(through_red, std::size_t{1} << d);
  }
}

TEST(PrunedAdversarial, NamesMatchLadderLayout) {
  auto inst = gen_pruned_adversarial(2);
  const Graph& g = inst.graph;
  auto id = [&](const char* n) { return inst.named.at(n); };
  EXPECT_TRUE(g.has_edge(id("r"), id("x1")));
  EXPECT_TRUE(g.has_edge(id("r"), id("x2")));
  for (const char* x : {"x1", "x2", "x3", "x4"}) EXPECT_TRUE(g.has_edge(id(x), id("c1")));
  for (const char* x : {"x3", "x4", "x5", "x6"}) EXPECT_TRUE(g.has_edge(id(x), id("c2")));
  for (const char* x : {"x5", "x6"}) EXPECT_TRUE(g.has_edge(id(x), id("v")));
  EXPECT_FALSE(g.has_edge(id("x1"), id("c2")));
}
