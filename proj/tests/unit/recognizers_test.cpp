#include <gtest/gtest.h>

#include "oracles.hpp"
#include "transit/canonical.hpp"
#include "transit/error.hpp"
#include "transit/patterns.hpp"
#include "transit/recognizers.hpp"

using namespace transit;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}
Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}
Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}
Graph house() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}); }
Graph domino() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}); }
// path 0..4 plus a vertex 5 on 0..3
Graph fan3() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }

}  // namespace

TEST(Patterns, Library) {
  EXPECT_EQ(family_A().size(), 12U);
  EXPECT_EQ(pattern("house").graph.size(), 5U);
  EXPECT_THROW(pattern("nope"), Error);
  for (const Pattern& p : family_A()) {
    const Graph& g = p.graph;
    auto r = [&](const char* role) { return *g.ground().index_of(role); };
    const std::size_t u = r("u"), v = r("v"), x = r("x"), y = r("y"), w = r("w");
    EXPECT_TRUE(g.adjacent(u, x) && g.adjacent(x, v) && g.adjacent(x, y) && g.adjacent(y, w)) << p.name;
    EXPECT_FALSE(g.adjacent(u, y) || g.adjacent(v, y)) << p.name;
  }
}

TEST(Patterns, ContainsInduced) {
  const auto id = contains_induced(house(), pattern("house"));
  ASSERT_TRUE(id);
  EXPECT_TRUE(oracle::induced_subgraph(house(), pattern("house").graph));
  EXPECT_TRUE(contains_induced(cycle(6), pattern("P4")));
  EXPECT_FALSE(contains_induced(complete(4), pattern("claw")));
  // embeddings preserve adjacency both ways
  const auto e = contains_induced(domino(), pattern("C4"));
  ASSERT_TRUE(e);
  const Graph& c4 = pattern("C4").graph;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) EXPECT_EQ(c4.adjacent(i, j), domino().adjacent((*e)[i], (*e)[j]));
}

TEST(Patterns, AgreeWithOracleUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (const Pattern& p : pattern_library())
        EXPECT_EQ(contains_induced(g, p).has_value(), oracle::induced_subgraph(g, p.graph))
            << to_graph6(g) << " " << p.name;
}

TEST(Recognizers, Holes) {
  ASSERT_TRUE(has_hole(cycle(5)));
  EXPECT_EQ(*has_hole(cycle(5)), Subset::full(5));
  EXPECT_FALSE(has_hole(complete(5)));
  EXPECT_FALSE(has_hole(domino()));
  EXPECT_FALSE(has_hole(fan3()));
  const auto c = find_induced_cycle(cycle(6), 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 6U);
  EXPECT_THROW(find_induced_cycle(Graph{GroundSet(17)}, 4), Error);
}

TEST(Recognizers, AsteroidalTriple) {
  // spider: centre 0, legs 0-1-2, 0-3-4, 0-5-6
  const Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const auto at = has_asteroidal_triple(spider);
  ASSERT_TRUE(at);
  EXPECT_EQ((std::array<std::size_t, 3>{2, 4, 6}), *at);
  EXPECT_FALSE(has_asteroidal_triple(path(6)));
  // 0, 2, 4 on C6: each pair joined by the arc through the vertex between them
  const auto c6 = has_asteroidal_triple(cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ((std::array<std::size_t, 3>{0, 2, 4}), *c6);
  EXPECT_FALSE(has_asteroidal_triple(cycle(5)));
}

TEST(Recognizers, NamedExamples) {
  const AxiomVerdict h = recognize(house(), ClassId::hhd_free);
  EXPECT_FALSE(h.holds);
  EXPECT_EQ(h.detail, "house");
  EXPECT_FALSE(recognize(fan3(), ClassId::ptolemaic).holds);
  EXPECT_TRUE(recognize(fan3(), ClassId::chordal).holds);
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_TRUE(recognize(star, ClassId::star_forest).holds);
  EXPECT_TRUE(recognize(star, ClassId::tree).holds);
  const AxiomVerdict c4 = recognize(cycle(4), ClassId::p3_j0_class);
  EXPECT_FALSE(c4.holds);
  EXPECT_EQ(c4.detail, "C4");
  EXPECT_FALSE(recognize(cycle(4), ClassId::chordal).holds);
  EXPECT_TRUE(recognize(cycle(4), ClassId::two_connected_or_tree_components).holds);
  EXPECT_FALSE(recognize(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}),
                         ClassId::two_connected_or_tree_components).holds);
  EXPECT_TRUE(recognize(complete(4), ClassId::block_graph).holds);
  EXPECT_FALSE(recognize(cycle(4), ClassId::block_graph).holds);
  EXPECT_FALSE(recognize(complete(3), ClassId::triangle_free).holds);
  for (ClassId c : kAllClasses) EXPECT_EQ(parse_class(class_name(c)), c);
}

TEST(Recognizers, Ptolemy) {
  EXPECT_TRUE(ptolemy_inequality_holds(path(5)).holds);
  EXPECT_TRUE(ptolemy_inequality_holds(complete(4)).holds);
  const AxiomVerdict c4 = ptolemy_inequality_holds(cycle(4));
  ASSERT_FALSE(c4.holds);
  const DistanceMatrix d(cycle(4));
  const auto u = *c4.at("u"), v = *c4.at("v"), w = *c4.at("w"), x = *c4.at("x");
  EXPECT_LT(d(u, v) * d(w, x) + d(u, x) * d(v, w), d(u, w) * d(v, x));
  EXPECT_THROW(ptolemy_inequality_holds(Graph::from_edges(3, {{0, 1}})), Error);
}

TEST(Recognizers, PerfectEliminationOrder) {
  const auto peo = perfect_elimination_order(fan3());
  ASSERT_TRUE(peo);
  EXPECT_EQ(peo->size(), 5U);
  EXPECT_FALSE(perfect_elimination_order(cycle(4)));
}

TEST(Recognizers, FailingVerdictsCarryWitnessUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      EXPECT_EQ(is_chordal(g), !oracle::has_induced_cycle(g, 4)) << to_graph6(g);
      EXPECT_EQ(has_hole(g).has_value(), oracle::has_induced_cycle(g, 5)) << to_graph6(g);
      for (ClassId c : kAllClasses) {
        const AxiomVerdict v = recognize(g, c);
        if (!v.holds) EXPECT_TRUE(!v.witness.empty() || v.witness_set) << to_graph6(g) << class_name(c);
      }
    }
}
