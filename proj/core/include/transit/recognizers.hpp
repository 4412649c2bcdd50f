#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "transit/graph.hpp"
#include "transit/patterns.hpp"
#include "transit/verdict.hpp"

namespace transit {

/// Induced-cycle searches refuse larger graphs.
inline constexpr std::size_t kMaxCycleSearchGround = 16;

enum class ClassId {
  chordal,
  ptolemaic,
  interval,
  proper_interval,
  hhd_free,
  weak_bipolarizable,
  block_graph,
  tree,
  star_forest,
  triangle_free,
  p3_j0_class,
  family_A_free,
  claw_free,
  two_connected_or_tree_components,
};

inline constexpr std::array<ClassId, 14> kAllClasses = {
    ClassId::chordal,       ClassId::ptolemaic,      ClassId::interval,
    ClassId::proper_interval, ClassId::hhd_free,     ClassId::weak_bipolarizable,
    ClassId::block_graph,   ClassId::tree,           ClassId::star_forest,
    ClassId::triangle_free, ClassId::p3_j0_class,    ClassId::family_A_free,
    ClassId::claw_free,     ClassId::two_connected_or_tree_components};

std::string_view class_name(ClassId c);
std::optional<ClassId> parse_class(std::string_view text);

/// Perfect elimination order from maximum cardinality search, or nullopt
/// when the graph is not chordal.
std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

/// Some induced cycle with at least `min_length` vertices, in cyclic order.
/// min_length >= 3. Throws kGroundTooLarge above 16 vertices.
std::optional<std::vector<std::size_t>> find_induced_cycle(const Graph& g, std::size_t min_length);

/// Vertex set of an induced cycle of length >= 5.
std::optional<Subset> has_hole(const Graph& g);

/// Pairwise nonadjacent x, y, z where each pair is joined by a path avoiding
/// the closed neighbourhood of the third; the lexicographically first one.
std::optional<std::array<std::size_t, 3>> has_asteroidal_triple(const Graph& g);

/// Class membership with a forbidden-structure witness on failure: an
/// embedding (roles from the pattern), a cycle (roles c0, c1, ...), an
/// asteroidal triple (x, y, z), a non-complete block (u, v nonadjacent in the
/// block, set = block), or a cut vertex c of a component that is neither a
/// tree nor 2-connected (set = component).
AxiomVerdict recognize(const Graph& g, ClassId c);

/// d(u,v)d(w,x) + d(u,x)d(v,w) >= d(u,w)d(v,x) for all 4-tuples; witness
/// roles u, v, w, x. Throws kDisconnected.
AxiomVerdict ptolemy_inequality_holds(const Graph& g);

}  // namespace transit
