#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// A small named graph used as a forbidden induced subgraph. Vertex labels
/// are the role names used in witnesses.
struct Pattern {
  std::string name;
  Graph graph;
};

/// house, domino, A, fan3, claw, P4, C4, diamond (K4 minus an edge),
/// paw (3-pan), triangle, then the twelve members of family_A().
const std::vector<Pattern>& pattern_library();

/// F, P, P_bar, K14_plus, K23, P_plus, H, M33, S23, K23_plus, F3, S23_plus.
/// Every member is drawn on roles u, v, x, y, w with edges ux, xv, xy, yw,
/// no uy or vy, and a member-specific choice among uw, vw, xw, uv, so that
/// x ∈ P3(u,v) and y ∈ P3(x,w) while y lies in none of P3(u,w), P3(v,w),
/// P3(u,v).
const std::vector<Pattern>& family_A();

/// Looks a pattern up by name; throws kMalformedInput when unknown.
const Pattern& pattern(std::string_view name);

/// First induced embedding in lexicographic order of the image tuple:
/// result[i] is the host vertex playing pattern vertex i. Patterns above 8
/// vertices are rejected with kGroundTooLarge.
std::optional<std::vector<std::size_t>> contains_induced(const Graph& g, const Pattern& p);

}  // namespace transit
