#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transit/subset.hpp"

namespace transit {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph; adjacency is one Subset per vertex.
class Graph {
 public:
  /// Edgeless graph on the ground set.
  explicit Graph(GroundSet ground);
  /// Throws kIndexOutOfRange for bad endpoints and kMalformedInput for loops.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::vector<std::string> labels = {});

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return adj_.size(); }
  Subset vertices() const { return Subset::full(size()); }
  Subset neighbors(std::size_t v) const { return adj_[v]; }
  Subset closed_neighbors(std::size_t v) const { return adj_[v].with(v); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(std::size_t u, std::size_t v);

  /// Subgraph induced on s, vertices renumbered in ascending order.
  Graph induced(Subset s) const;
  /// Vertex i of this graph becomes vertex perm[i].
  Graph relabel(const std::vector<std::size_t>& perm) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  GroundSet ground_;
  std::vector<Subset> adj_;
};

/// graph6, short form only (n <= 62). Errors carry the byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();
  explicit DistanceMatrix(const Graph& g);
  std::size_t size() const { return n_; }
  int operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<int> d_;
};

/// Vertices reachable from `start` inside the subgraph induced on `allowed`
/// (start must be in allowed).
Subset reach_within(const Graph& g, std::size_t start, Subset allowed);
bool is_connected(const Graph& g);
/// True when s is nonempty and induces a connected subgraph.
bool induces_connected(const Graph& g, Subset s);
/// Throws kDisconnected unless g is connected.
void require_connected(const Graph& g);

/// Blocks are maximal 2-connected pieces, bridges, and isolated vertices.
/// The block-cut tree has nodes 0..blocks-1 for blocks followed by one node
/// per cut vertex (in ascending vertex order).
struct BlockDecomposition {
  std::vector<Subset> blocks;
  Subset cut_vertices;
  std::vector<std::vector<std::size_t>> tree;
  std::vector<std::size_t> cut_vertex_of_node;  // indexed by node - blocks.size()
  std::vector<std::size_t> vertex_node;         // cut-vertex node, else its only block

  std::size_t node_of(std::size_t v) const;
  /// Tree nodes on the path from node_of(u) to node_of(v), inclusive.
  std::vector<std::size_t> tree_path(std::size_t u, std::size_t v) const;
  bool is_block_node(std::size_t node) const { return node < blocks.size(); }
};

BlockDecomposition blocks(const Graph& g);

}  // namespace transit
