#pragma once

#include <cstdint>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// Largest graph the 64-bit canonical code can hold.
inline constexpr std::size_t kMaxCanonicalGround = 11;
/// Largest order the enumerator accepts.
inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Canonical labelling: order[p] is the vertex placed at position p. The
/// code packs the relabelled upper triangle in graph6 bit order, first bit
/// most significant; isomorphic graphs get equal codes.
struct CanonicalForm {
  std::uint64_t code = 0;
  std::vector<std::size_t> order;
};

/// Colour refinement, then individualisation over the first nontrivial
/// cell, keeping the lexicographically largest code. Throws
/// kGroundTooLarge above 11 vertices.
CanonicalForm canonical_form(const Graph& g);

/// The graph on n vertices encoded by `code`.
Graph graph_from_code(std::size_t n, std::uint64_t code);
Graph canonical_graph(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, each in canonical labelling, sorted by code. Grows every
/// (n-1)-vertex representative by a new vertex joined to each nonempty
/// subset. Throws kGroundTooLarge outside 1..8. Results are cached.
const std::vector<Graph>& enumerate_connected_graphs(std::size_t n);

}  // namespace transit
