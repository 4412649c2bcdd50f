#include <gtest/gtest.h>

#include <random>

#include "transit/error.hpp"
#include "transit/graph.hpp"

using namespace transit;

namespace {

Graph house() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}); }

}  // namespace

TEST(Graph6, DecodeKnownStrings) {
  const Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.size(), 1U);
  EXPECT_EQ(k1.edge_count(), 0U);
  const Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.size(), 5U);
  EXPECT_EQ(to_graph6(g), "D?{");
  EXPECT_EQ(to_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}})), "Bg");
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 20;
    Graph g{GroundSet(n)};
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, Malformed) {
  for (const char* bad : {"", "D?", "D?{{", "~??", "D\x7f{"}) {
    try {
      parse_graph6(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedGraph6) << bad;
    }
  }
}

TEST(Graph, EdgesAndInduced) {
  const Graph h = house();
  EXPECT_EQ(h.edge_count(), 6U);
  EXPECT_EQ(h.edges().front(), (Edge{0, 1}));
  const Graph c4 = h.induced(Subset{0, 1, 2, 3});
  EXPECT_EQ(c4.edge_count(), 4U);
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
  const Graph r = h.relabel({4, 3, 2, 1, 0});
  EXPECT_TRUE(r.adjacent(4, 3));
  EXPECT_TRUE(r.adjacent(0, 2));
}

TEST(Graph, Distances) {
  const Graph p = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const DistanceMatrix d(p);
  EXPECT_EQ(d(0, 3), 3);
  EXPECT_EQ(d(2, 2), 0);
  const Graph two = Graph::from_edges(3, {{0, 1}});
  EXPECT_EQ(DistanceMatrix(two)(0, 2), DistanceMatrix::kUnreachable);
  EXPECT_FALSE(is_connected(two));
  EXPECT_THROW(require_connected(two), Error);
  EXPECT_TRUE(induces_connected(p, Subset{1, 2}));
  EXPECT_FALSE(induces_connected(p, Subset{0, 2}));
  EXPECT_EQ(reach_within(p, 0, Subset{0, 1, 3}), (Subset{0, 1}));
}

TEST(Blocks, TreeC4AndHouse) {
  const Graph tree = Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  const BlockDecomposition bt = blocks(tree);
  EXPECT_EQ(bt.blocks.size(), 4U);
  EXPECT_EQ(bt.cut_vertices, (Subset{1, 3}));
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(blocks(c4).blocks.size(), 1U);
  EXPECT_TRUE(blocks(c4).cut_vertices.empty());
  const BlockDecomposition bh = blocks(house());
  ASSERT_EQ(bh.blocks.size(), 1U);
  EXPECT_EQ(bh.blocks[0], Subset::full(5));
  EXPECT_TRUE(bh.cut_vertices.empty());
}

TEST(Blocks, TreePath) {
  // two triangles sharing vertex 2
  const Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const BlockDecomposition b = blocks(bowtie);
  EXPECT_EQ(b.cut_vertices, Subset{2});
  const auto path = b.tree_path(0, 4);
  ASSERT_EQ(path.size(), 3U);
  EXPECT_TRUE(b.is_block_node(path[0]));
  EXPECT_FALSE(b.is_block_node(path[1]));
  EXPECT_TRUE(b.is_block_node(path[2]));
}
