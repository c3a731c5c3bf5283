#include <gtest/gtest.h>

#include "bel/corpus.hpp"
#include "bel/graph.hpp"
#include "bel/graph_io.hpp"
#include "oracles.hpp"

using namespace bel;

namespace {

std::vector<Graph> all_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto part = labeled_graphs(k, false);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

TEST(Graph, Factories) {
  EXPECT_EQ(Graph::complete(4).size(), 6u);
  EXPECT_EQ(Graph::path(4).size(), 3u);
  EXPECT_EQ(Graph::cycle(5).size(), 5u);
  Graph s = Graph::star(3);
  EXPECT_EQ(s.order(), 4);
  EXPECT_EQ(s.degree(1), 3);
}

TEST(Graph, RejectsBadEdges) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
  EXPECT_THROW(g.add_edge(2, 4), std::out_of_range);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, InducedAndRelabel) {
  Graph g = net_graph();
  std::vector<Vertex> tri{1, 2, 3};
  EXPECT_EQ(g.induced(tri), Graph::complete(3));
  Labeling rev(std::vector<int>{3, 2, 1});
  Graph p = relabel(Graph(3, {{1, 2}}), rev);
  EXPECT_TRUE(p.has_edge(3, 2));
  EXPECT_FALSE(p.has_edge(1, 2));
  EXPECT_THROW(Labeling(std::vector<int>{1, 1, 2}), std::invalid_argument);
  EXPECT_EQ(Labeling::from_order(std::vector<Vertex>{2, 3, 1}).values(), (std::vector<int>{3, 1, 2}));
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(Graph::complete(4)).size(), 0u);
  EXPECT_EQ(complement(complement(net_graph())), net_graph());
  EXPECT_EQ(complement(net_graph()).size(), 15u - 6u);
}

TEST(Graph, ConnectedComponents) {
  EXPECT_EQ(connected_components(Graph::path(3)), (std::vector<VertexSet>{{1, 2, 3}}));
  EXPECT_EQ(connected_components(Graph(3)), (std::vector<VertexSet>{{1}, {2}, {3}}));
  Graph s = Graph::star(3);
  EXPECT_EQ(component_masks(s, s.all_vertices() & ~vertex_bit(1)).size(), 3u);
}

TEST(Graph, CutpointExamples) {
  EXPECT_EQ(cutpoints(Graph::path(3)), (VertexSet{2}));
  EXPECT_TRUE(cutpoints(Graph::complete(3)).empty());
  EXPECT_EQ(cutpoints(net_graph()), (VertexSet{1, 2, 3}));
}

TEST(Graph, BlockExamples) {
  EXPECT_EQ(blocks(net_graph()), (std::vector<VertexSet>{{1, 2, 3}, {1, 4}, {2, 5}, {3, 6}}));
  EXPECT_TRUE(is_block_graph(net_graph()));
  EXPECT_EQ(blocks(Graph::cycle(4)), (std::vector<VertexSet>{{1, 2, 3, 4}}));
  EXPECT_FALSE(is_block_graph(Graph::cycle(4)));
  Graph tree = Graph::star(3);
  EXPECT_EQ(blocks(tree).size(), 3u);
  EXPECT_TRUE(is_block_graph(tree));
}

TEST(Graph, CutpointsMatchRemovalOracle) {
  for (const auto& g : all_graphs_up_to(6)) ASSERT_EQ(cutpoints(g), oracle::cutpoints(g)) << format_graph(g);
}

TEST(Graph, BlocksMatchMaximalBiconnectedOracle) {
  for (const auto& g : all_graphs_up_to(5)) ASSERT_EQ(blocks(g), oracle::blocks(g)) << format_graph(g);
  for (const auto& g : isomorphism_classes(6, false)) ASSERT_EQ(blocks(g), oracle::blocks(g)) << format_graph(g);
}

TEST(Graph, BlockGraphMatchesChordalDiamondFreeOracle) {
  for (const auto& g : all_graphs_up_to(6)) ASSERT_EQ(is_block_graph(g), oracle::is_block_graph(g)) << format_graph(g);
}

TEST(Graph, BlocksPartitionEdgesAndCutpointsShareBlocks) {
  for (const auto& g : all_graphs_up_to(5)) {
    const auto bs = blocks(g);
    for (Edge e : g.edges()) {
      int holding = 0;
      for (const auto& b : bs)
        holding += std::binary_search(b.begin(), b.end(), e.u) && std::binary_search(b.begin(), b.end(), e.v);
      ASSERT_EQ(holding, 1) << format_graph(g);
    }
    for (Vertex c : cutpoints(g)) {
      int holding = 0;
      for (const auto& b : bs) holding += std::binary_search(b.begin(), b.end(), c);
      ASSERT_GE(holding, 2) << format_graph(g);
    }
  }
}

TEST(Graph, DominatingSet) {
  EXPECT_EQ(dominating_set_T(Graph::star(3)), (VertexSet{1}));
  EXPECT_EQ(dominating_set_T(Graph::complete(3)), (VertexSet{1, 2, 3}));
  EXPECT_EQ(dominating_set_T(Graph::path(3)), (VertexSet{2}));
}

TEST(Graph, TwoPrimeRule) {
  EXPECT_TRUE(ass_count_is_two(Graph::path(3)));
  EXPECT_FALSE(ass_count_is_two(Graph::complete(3)));
  EXPECT_TRUE(ass_count_is_two(Graph::star(3)));
  EXPECT_THROW(ass_count_is_two(Graph(2)), std::invalid_argument);
}

TEST(Graph, Whiskers) {
  EXPECT_EQ(add_whisker(Graph::complete(2), 1), relabel(Graph::path(3), Labeling(std::vector<int>{2, 1, 3})));
  Graph paw = add_whisker(Graph::complete(3), 1);
  EXPECT_EQ(paw.order(), 4);
  EXPECT_EQ(paw.degree(1), 3);
  Graph net = add_whisker(add_whisker(add_whisker(Graph::complete(3), 1), 2), 3);
  EXPECT_EQ(net, net_graph());
  EXPECT_THROW(add_whisker(Graph::complete(3), 4), std::out_of_range);
  for (const auto& g : all_graphs_up_to(4))
    for (Vertex v = 1; v <= g.order(); ++v) {
      Graph h = add_whisker(g, v);
      ASSERT_EQ(h.order(), g.order() + 1);
      ASSERT_EQ(h.size(), g.size() + 1);
    }
}

TEST(Graph, CliqueJoin) {
  EXPECT_EQ(clique_join(Graph::complete(2), {1, 2}, 3), Graph::complete(3));
  Graph k4 = clique_join(Graph::path(3), {1, 2}, 4);
  EXPECT_EQ(k4.order(), 5);
  std::vector<Vertex> q{1, 2, 4, 5};
  EXPECT_EQ(k4.induced(q), Graph::complete(4));
  EXPECT_TRUE(k4.has_edge(2, 3));
  EXPECT_FALSE(k4.has_edge(3, 4));
  for (const auto& g : all_graphs_up_to(4))
    for (Edge e : g.edges()) ASSERT_EQ(clique_join(g, e, 2), g);
  EXPECT_THROW(clique_join(Graph::path(3), {1, 3}, 3), std::invalid_argument);
  EXPECT_THROW(clique_join(Graph::path(3), {1, 2}, 1), std::invalid_argument);
}

TEST(Graph, DisjointUnion) {
  Graph u = disjoint_union(Graph::path(2), Graph::complete(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 4u);
  EXPECT_TRUE(u.has_edge(3, 5));
  EXPECT_EQ(connected_components(u).size(), 2u);
}

TEST(GraphIo, ParsesHeaderCommentsAndBlankLines) {
  Graph g = parse_graph("# a path\nn 4\n\n1 2  # first\n2 3\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 2u);
  Graph h = parse_graph("1 2\n2 3\n");
  EXPECT_EQ(h, Graph::path(3));
  EXPECT_EQ(parse_graph("n 1\n").order(), 1);
}

TEST(GraphIo, ReportsLineNumbers) {
  try {
    parse_graph("n 3\n1 2\n2 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_graph("n 2\n1 3\n"), ParseError);
  EXPECT_THROW(parse_graph("1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("1 2 3\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(read_graph_file(BEL_TEST_DATA_DIR "/no_such_file.txt"), ParseError);
}

TEST(GraphIo, FormatRoundTrips) {
  for (const auto& g : all_graphs_up_to(4)) ASSERT_EQ(parse_graph(format_graph(g)), g);
  EXPECT_EQ(read_graph_file(BEL_SAMPLES_DIR "/net.txt"), net_graph());
}
