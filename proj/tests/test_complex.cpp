#include <gtest/gtest.h>

#include <random>

#include "bel/complex.hpp"
#include "bel/corpus.hpp"
#include "bel/decomp.hpp"
#include "bel/graph_classes.hpp"
#include "bel/graph_io.hpp"
#include "oracles.hpp"

using namespace bel;

namespace {

SimplicialComplex complex_of(int n, std::vector<std::vector<Symbol>> facets) {
  SimplicialComplex d;
  d.n = n;
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  d.facets = std::move(facets);
  return d;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, int count) {
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    Monomial m;
    const int size = 2 + static_cast<int>(rng() % 2);
    for (int a = 0; a < size; ++a) m.set(static_cast<int>(rng() % (2 * n)), 1);
    gens.push_back(m);
  }
  return delta_of(n, gens);
}

}  // namespace

TEST(Complex, FacetsOfInitialIdeal) {
  QRing R(RationalField{}, 3);
  auto d = delta_of(initial_ideal(R, Graph::path(3)));
  EXPECT_EQ(d.facets, (std::vector<std::vector<Symbol>>{{0, 4}, {1, 5}}));
  EXPECT_EQ(d.symbol_name(4), "y2");
  EXPECT_TRUE(d.is_antichain());

  QRing S(RationalField{}, 4);
  auto star = delta_of(initial_ideal(S, Graph::star(3)));
  EXPECT_EQ(star.facets.size(), 6u);
  EXPECT_TRUE(std::find(star.facets.begin(), star.facets.end(), std::vector<Symbol>{1, 4, 6}) != star.facets.end());

  QRing T(RationalField{}, 1);
  EXPECT_EQ(delta_of(Ideal<RationalField>(T, {T.x(1)})).facets, (std::vector<std::vector<Symbol>>{{0}}));
}

TEST(Complex, RejectsNonSquarefreeAndNonMonomial) {
  EXPECT_THROW(delta_of(1, {Monomial::variable(0, 2)}), std::invalid_argument);
  QRing R(RationalField{}, 2);
  EXPECT_THROW(delta_of(Ideal<RationalField>(R, {R.edge_binomial(1, 2)})), std::invalid_argument);
}

TEST(Complex, DropsRedundantGenerators) {
  auto d = delta_of(2, {Monomial::variable(0), Monomial::variable(0) * Monomial::variable(1)});
  EXPECT_EQ(d.facets, (std::vector<std::vector<Symbol>>{{0}}));
}

TEST(SpecialCycle, Triangle) {
  auto d = complex_of(2, {{0, 1}, {1, 2}, {0, 2}});
  auto c = find_special_odd_cycle(d);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 3u);
  EXPECT_TRUE(is_special_cycle(d, *c));
}

TEST(SpecialCycle, AbsentFromStarsAndSingleFacets) {
  for (int t = 1; t <= 5; ++t) {
    std::vector<std::vector<Symbol>> fs;
    for (int k = 1; k <= t; ++k) fs.push_back({0, k});
    EXPECT_FALSE(find_special_odd_cycle(complex_of(3, fs)).has_value()) << t;
  }
  EXPECT_FALSE(find_special_odd_cycle(complex_of(2, {{0, 1, 2}})).has_value());
  EXPECT_FALSE(find_special_odd_cycle(complex_of(2, {})).has_value());
}

TEST(SpecialCycle, ThirdVertexInFacetIsNotSpecial) {
  // A triangle whose facets all hold a shared fourth vertex is still a
  // triangle; one facet holding all three vertices is not a cycle.
  auto d = complex_of(2, {{0, 1, 2}, {1, 3}, {0, 3}});
  SpecialCycle bad{{0, 1, 2}, {0, 1, 2}};
  EXPECT_FALSE(is_special_cycle(d, bad));
  auto c = find_special_odd_cycle(d);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_special_cycle(d, *c));
}

TEST(SpecialCycle, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(31);
  int with_cycle = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto d = random_complex(rng, n, 3 + static_cast<int>(rng() % 5));
    const auto c = find_special_odd_cycle(d);
    ASSERT_EQ(c.has_value(), oracle::has_special_odd_cycle(d)) << k;
    if (c) {
      ++with_cycle;
      ASSERT_TRUE(is_special_cycle(d, *c));
      ASSERT_EQ(c->length() % 2, 1u);
    }
  }
  EXPECT_GT(with_cycle, 0);
  EXPECT_LT(with_cycle, 300);
}

TEST(SpecialCycle, CriterionImpliesEqualityAtTwo) {
  int certified = 0;
  for (const auto& g : connected_graphs_up_to(5, true)) {
    if (!equality_criterion_via_cycles(g)) continue;
    ++certified;
    QRing R(RationalField{}, g.order());
    ASSERT_TRUE(equality_verdict(R, g, 2).equal) << format_graph(g);
  }
  EXPECT_GT(certified, 0);
}

TEST(SpecialCycle, GraphExamples) {
  EXPECT_TRUE(equality_criterion_via_cycles(Graph::complete(2)));
  EXPECT_FALSE(equality_criterion_via_cycles(net_graph()));
  for (const auto& g : caterpillar_trees_up_to(6))
    EXPECT_TRUE(equality_criterion_via_cycles(relabel(g, caterpillar_labeling(g)))) << format_graph(g);
}
