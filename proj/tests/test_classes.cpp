#include <gtest/gtest.h>

#include "bel/bei.hpp"
#include "bel/corpus.hpp"
#include "bel/graph_classes.hpp"
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

Graph spider() {  // three legs of length 2 around vertex 1
  return Graph(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
}

}  // namespace

TEST(Isomorphism, CodesSeparateClassesAndOrders) {
  EXPECT_NE(canonical_code(Graph(1)), canonical_code(Graph(2)));
  EXPECT_TRUE(is_isomorphic(Graph::path(4), relabel(Graph::path(4), Labeling(std::vector<int>{3, 1, 4, 2}))));
  EXPECT_FALSE(is_isomorphic(Graph::path(4), Graph::star(3)));
  EXPECT_EQ(isomorphism_classes(5, true).size(), 21u);
  EXPECT_EQ(isomorphism_classes(6, false).size(), 156u);
}

TEST(Net, InducedCopies) {
  EXPECT_FALSE(is_net_free(net_graph()));
  for (const auto& g : all_graphs_up_to(5)) ASSERT_TRUE(is_net_free(g));
  Graph two = add_whisker(add_whisker(Graph::complete(3), 1), 2);
  EXPECT_TRUE(is_net_free(two));
  Graph bigger = add_whisker(net_graph(), 4);
  auto found = find_induced_net(bigger);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(is_isomorphic(bigger.induced(*found), net_graph()));
}

TEST(Caterpillar, Examples) {
  Graph g = add_whisker(Graph::path(3), 2);
  EXPECT_TRUE(is_caterpillar(g));
  EXPECT_EQ(central_path(g).vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_FALSE(is_caterpillar(spider()));
  EXPECT_FALSE(is_caterpillar(Graph::complete(3)));
  EXPECT_THROW(central_path(Graph::complete(3)), std::invalid_argument);
  EXPECT_TRUE(is_caterpillar(Graph(1)));
}

TEST(Caterpillar, MatchesLeafStrippingOracle) {
  for (const auto& g : all_graphs_up_to(6)) ASSERT_EQ(is_caterpillar(g), oracle::is_caterpillar(g)) << format_graph(g);
  EXPECT_EQ(is_caterpillar(spider()), oracle::is_caterpillar(spider()));
}

TEST(Caterpillar, CentralPathIsLongestAndDominating) {
  for (const auto& g : caterpillar_trees_up_to(6)) {
    const auto p = central_path(g);
    ASSERT_TRUE(p.is_path_in(g));
    VertexMask near = 0;
    for (Vertex v : p.vertices) near |= vertex_bit(v) | g.neighbor_mask(v);
    ASSERT_EQ(near, g.all_vertices());
    for (const auto& q : induced_paths(g)) ASSERT_LE(q.vertices.size(), p.vertices.size());
  }
}

TEST(Caterpillar, LabelingExample) {
  // path a-b-c = 1-2-3, whisker w = 4 at b
  Graph g = add_whisker(Graph::path(3), 2);
  EXPECT_EQ(caterpillar_labeling(g).values(), (std::vector<int>{1, 2, 4, 3}));
  EXPECT_EQ(caterpillar_labeling(Graph::path(5)), Labeling::identity(5));
  EXPECT_THROW(caterpillar_labeling(spider()), std::invalid_argument);
}

TEST(Caterpillar, LabelingConditions) {
  for (const auto& g : caterpillar_trees_up_to(6)) {
    const Labeling s = caterpillar_labeling(g);
    const auto p = central_path(g).vertices;
    if (g.order() > 1) {
      Vertex first = p.front();
      EXPECT_EQ(s(first), 1);
    }
    // Each whisker z of path vertex v_i sits between v_i and v_{i+1}.
    for (std::size_t i = 0; i < p.size(); ++i)
      for (Vertex z : g.neighbors(p[i])) {
        if (std::find(p.begin(), p.end(), z) != p.end()) continue;
        EXPECT_GT(s(z), s(p[i]));
        if (i + 1 < p.size()) {
          EXPECT_LT(s(z), s(p[i + 1]));
        }
      }
    EXPECT_TRUE(is_weakly_closed_with_labeling(g, s)) << format_graph(g);
    EXPECT_LE(gb_max_degree(g, s), 3);
  }
}

TEST(GenCaterpillar, NetWitnessReplays) {
  auto w = is_generalized_caterpillar(net_graph());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->central_path.vertices, (std::vector<Vertex>{4, 1, 2, 5}));
  ASSERT_EQ(w->joins.size(), 1u);
  EXPECT_EQ(w->joins[0].size, 3);
  EXPECT_EQ(w->joins[0].added, (VertexSet{3}));
  ASSERT_EQ(w->whiskers.size(), 1u);
  EXPECT_EQ(w->whiskers[0].at, 3);
  EXPECT_EQ(w->whiskers[0].leaf, 6);
  EXPECT_EQ(replay(*w, 6), net_graph());
}

TEST(GenCaterpillar, Examples) {
  for (const auto& g : caterpillar_trees_up_to(6)) {
    auto w = is_generalized_caterpillar(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->joins.empty());
  }
  EXPECT_FALSE(is_generalized_caterpillar(Graph::cycle(4)).has_value());
  EXPECT_FALSE(is_generalized_caterpillar(spider()).has_value());
}

TEST(GenCaterpillar, RecognizerMatchesGenerativeDefinition) {
  std::set<std::uint64_t> generated;
  for (const auto& g : generated_gen_caterpillars(6)) generated.insert(canonical_code(g));
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : isomorphism_classes(n, false)) {
      auto w = is_generalized_caterpillar(g);
      ASSERT_EQ(w.has_value(), generated.count(canonical_code(g)) == 1) << format_graph(g);
      if (w) {
        ASSERT_EQ(replay(*w, g.order()), g) << format_graph(g);
      }
    }
}

TEST(GenCaterpillar, SevenVertexWitnessesReplay) {
  for (const auto& g : generated_gen_caterpillars(7)) {
    auto w = is_generalized_caterpillar(g);
    ASSERT_TRUE(w.has_value()) << format_graph(g);
    ASSERT_EQ(replay(*w, g.order()), g);
  }
}

TEST(Closed, Examples) {
  EXPECT_TRUE(is_closed_with_labeling(Graph::path(5), Labeling::identity(5)));
  Labeling odd(std::vector<int>{2, 4, 1, 3});
  EXPECT_TRUE(is_closed_with_labeling(Graph::complete(4), odd));
  EXPECT_FALSE(is_closed(Graph::star(3)));
  EXPECT_THROW(is_closed(Graph::path(9)), SizeCapError);
  EXPECT_TRUE(is_closed(Graph::path(9), 9));
}

TEST(Closed, LabelingCheckMatchesLiteralCondition) {
  for (const auto& g : all_graphs_up_to(4)) {
    std::vector<int> s(g.order());
    std::iota(s.begin(), s.end(), 1);
    do {
      ASSERT_EQ(is_closed_with_labeling(g, Labeling(s)), oracle::closed_under(g, s)) << format_graph(g);
    } while (std::next_permutation(s.begin(), s.end()));
  }
}

TEST(Closed, QuadraticBasisExactlyWhenClosed) {
  for (const auto& g : connected_graphs_up_to(5, false)) {
    if (g.size() == 0) continue;
    const Labeling id = Labeling::identity(g.order());
    ASSERT_EQ(is_closed_with_labeling(g, id), gb_max_degree(g, id) == 2) << format_graph(g);
  }
}

TEST(WeaklyClosed, Examples) {
  EXPECT_TRUE(is_weakly_closed_with_labeling(Graph::star(3), Labeling::identity(4)));
  EXPECT_FALSE(is_weakly_closed(net_graph()));
  EXPECT_TRUE(is_weakly_closed(Graph::path(4)));
}

TEST(WeaklyClosed, MatchesLiteralSearch) {
  for (const auto& g : all_graphs_up_to(5)) {
    ASSERT_EQ(is_weakly_closed(g), oracle::is_weakly_closed(g)) << format_graph(g);
    std::vector<int> s(g.order());
    std::iota(s.begin(), s.end(), 1);
    do {
      ASSERT_EQ(is_weakly_closed_with_labeling(g, Labeling(s)), oracle::weakly_closed_under(g, s));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  for (const auto& g : isomorphism_classes(6, false)) ASSERT_EQ(is_weakly_closed(g), oracle::is_weakly_closed(g));
}

TEST(WeaklyClosed, ClosedImpliesWeaklyClosed) {
  for (const auto& g : all_graphs_up_to(6))
    if (is_closed(g)) {
      ASSERT_TRUE(is_weakly_closed(g)) << format_graph(g);
    }
  for (const auto& g : generated_gen_caterpillars(7))
    if (is_closed(g)) {
      ASSERT_TRUE(is_weakly_closed(g)) << format_graph(g);
    }
}

TEST(WeaklyClosed, LargeGraphsUseComplementComparability) {
  Graph p = Graph::path(10);
  EXPECT_TRUE(is_weakly_closed(p));
  Graph big = add_whisker(add_whisker(add_whisker(net_graph(), 4), 5), 6);
  EXPECT_FALSE(is_weakly_closed(big, 8));
}

TEST(Comparability, Examples) {
  EXPECT_FALSE(is_comparability(complement(net_graph())));
  EXPECT_FALSE(is_comparability(Graph::cycle(5)));
  EXPECT_TRUE(is_comparability(Graph::cycle(6)));
  EXPECT_TRUE(is_comparability(Graph::star(4)));
  EXPECT_TRUE(is_comparability(Graph::complete(5)));
}

TEST(Comparability, MatchesOrientationEnumeration) {
  for (const auto& g : all_graphs_up_to(5)) ASSERT_EQ(is_comparability(g), oracle::is_comparability(g)) << format_graph(g);
  for (const auto& g : isomorphism_classes(6, false))
    if (g.size() <= 12) {
      ASSERT_EQ(is_comparability(g), oracle::is_comparability(g)) << format_graph(g);
    }
}

TEST(Comparability, OrientationIsTransitive) {
  for (const auto& g : all_graphs_up_to(5)) {
    auto arcs = transitive_orientation(g);
    if (!arcs) continue;
    ASSERT_EQ(arcs->size(), g.size());
    std::set<std::pair<Vertex, Vertex>> a;
    for (Edge e : *arcs) {
      ASSERT_TRUE(g.has_edge(e.u, e.v));
      a.insert({e.u, e.v});
    }
    for (auto [x, y] : a)
      for (auto [y2, z] : a)
        if (y == y2) {
          ASSERT_TRUE(a.count({x, z}));
        }
  }
}

TEST(WeaklyClosed, EqualsComplementComparability) {
  for (const auto& g : all_graphs_up_to(6)) ASSERT_EQ(is_weakly_closed(g), is_comparability(complement(g))) << format_graph(g);
}

TEST(GenCatLabeling, Example) {
  // triangle a=1, b=2, c=3; whiskers w_a=4 at a, w_b=5 at b
  Graph g = add_whisker(add_whisker(Graph::complete(3), 1), 2);
  Labeling s = gencat_labeling(g);
  EXPECT_EQ(s.values(), (std::vector<int>{2, 4, 3, 1, 5}));
  EXPECT_TRUE(is_weakly_closed_with_labeling(g, s));
  EXPECT_THROW(gencat_labeling(net_graph()), std::invalid_argument);
  EXPECT_THROW(gencat_labeling(Graph::cycle(4)), std::invalid_argument);
}

TEST(GenCatLabeling, NetFreeEqualsWeaklyClosedOnCorpus) {
  for (const auto& g : generated_gen_caterpillars(7)) {
    ASSERT_EQ(is_net_free(g), is_weakly_closed(g)) << format_graph(g);
    if (is_net_free(g)) {
      ASSERT_TRUE(is_weakly_closed_with_labeling(g, gencat_labeling(g))) << format_graph(g);
    }
  }
  for (const auto& g : caterpillar_trees_up_to(6)) EXPECT_EQ(gencat_labeling(g), caterpillar_labeling(g));
}
