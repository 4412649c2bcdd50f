#pragma once

#include <cstdint>
#include <vector>

#include "transit/transit_function.hpp"

namespace transit {

/// Vertices with a list of nonempty hyperedges (overlaps allowed).
class Hypergraph {
 public:
  /// Throws kMalformedInput for an empty edge, kIndexOutOfRange for an edge
  /// leaving the ground set.
  Hypergraph(GroundSet ground, std::vector<Subset> edges);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  const std::vector<Subset>& edges() const { return edges_; }
  bool operator==(const Hypergraph&) const = default;

 private:
  GroundSet ground_;
  std::vector<Subset> edges_;
};

/// Every pair joined by an alternating vertex/edge path.
bool hyper_connected(const Hypergraph& h);

/// Removes v and every edge containing it; later vertices shift down by one.
/// Throws kIndexOutOfRange. Deleting the only vertex is rejected with
/// kMalformedInput (ground sets are nonempty).
Hypergraph strong_delete(const Hypergraph& h, std::size_t v);

/// Vertices x whose strong deletion leaves at least two vertices that are
/// not all connected. Throws kNotConnected.
Subset strong_cut_vertices(const Hypergraph& h);

/// C(u,v) = {u,v} plus every x ∉ {u,v} separating u from v, i.e. u and v
/// fall in different components once x and its edges are deleted.
/// Throws kNotConnected.
TransitFunction cutvertex_C_hyper(const Hypergraph& h);

/// Seeded generator: `edges` edges, each vertex joining each edge with
/// probability `density` (empty draws are redrawn).
Hypergraph random_hypergraph(std::size_t n, std::size_t edges, std::uint64_t seed, double density);

}  // namespace transit
