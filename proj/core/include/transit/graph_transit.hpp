#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "transit/graph.hpp"
#include "transit/transit_function.hpp"

namespace transit {

/// Induced-path searches (J, m3) are exponential and refuse larger graphs.
inline constexpr std::size_t kMaxInducedPathGround = 16;

/// The eight graph transit functions.
enum class Model { I, J, m3, A, T, WT, P3, C };

inline constexpr std::array<Model, 8> kAllModels = {Model::I,  Model::J,  Model::m3, Model::A,
                                                    Model::T,  Model::WT, Model::P3, Model::C};

/// "I", "J", "m3", "A", "T", "WT", "P3", "C".
std::string_view model_name(Model m);
/// Case-insensitive inverse of model_name.
std::optional<Model> parse_model(std::string_view text);

/// Geodesic interval: w with d(u,w) + d(w,v) = d(u,v).
TransitFunction interval_I(const Graph& g);
TransitFunction interval_I(const Graph& g, const DistanceMatrix& d);

/// Union of all induced (chordless) u,v-paths.
TransitFunction induced_J(const Graph& g);

/// {u,v} plus the vertices of induced u,v-paths of length at least three.
TransitFunction m3(const Graph& g);

/// Vertices on some u,v-path: the blocks along the block-cut tree path.
TransitFunction all_paths_A(const Graph& g);

/// Toll walks. For nonadjacent u, v, a vertex is in T(u,v) when it is a
/// common neighbour, or when there are a ∈ N(u)\N[v], b ∈ N(v)\N[u] joined
/// by an edge or through a component K of G - N[u] - N[v] adjacent to both;
/// then a, b and every such K are in T(u,v).
TransitFunction toll_T(const Graph& g);

/// Weak toll walks: x ∈ W_T(u,v) for nonadjacent u, v when some a ∈ N(u),
/// b ∈ N(v) with a = b, or a ∉ N(v) and b ∉ N(u), lie in one component with x
/// of the graph induced on (V - N(u) - N(v) - {u,v}) ∪ {a,b}.
TransitFunction weak_toll_WT(const Graph& g);

/// {u,v} plus common neighbours. Needs no connectivity.
TransitFunction p3(const Graph& g);

/// {u,v} plus the cut vertices on the block-cut tree path.
TransitFunction cutvertex_C(const Graph& g);

/// Dispatches on the model.
TransitFunction build_transit(const Graph& g, Model m);

}  // namespace transit
