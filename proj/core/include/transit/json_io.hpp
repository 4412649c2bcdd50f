#pragma once

#include <nlohmann/json.hpp>

#include "transit/axioms.hpp"
#include "transit/convexity.hpp"
#include "transit/graph.hpp"
#include "transit/harness.hpp"
#include "transit/hypergraph.hpp"
#include "transit/setsystems.hpp"
#include "transit/transit_function.hpp"
#include "transit/verdict.hpp"

namespace transit {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

// Readers throw Error(kMalformedInput) on shape errors and let the
// validating constructors report semantic ones.

/// Subsets travel as ascending index arrays.
json subset_to_json(Subset s);
Subset subset_from_json(const json& j);

/// {"n", "labels"?, "entries": [{"u","v","set"}]} with only the pairs that
/// differ from {u,v}, u < v.
json transit_to_json(const TransitFunction& r);
TransitFunction transit_from_json(const json& j);

/// {"n", "edges": [[u,v],...]} with u < v in lexicographic order.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json setsystem_to_json(const SetSystem& c);
SetSystem setsystem_from_json(const json& j);

json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

/// {"axiom","holds","witness":[{"role","index"}], "set"?, "detail"?}
json verdict_to_json(const AxiomVerdict& v);
/// {"<identifier>": verdict, ...} in axiom order.
json profile_to_json(const AxiomProfile& p);
json certificate_to_json(const GeometryCertificate& c);
json family_to_json(const ConvexFamily& f);
json k_report_to_json(const KAxiomReport& k);
json report_to_json(const TheoremReport& r);

/// Description of every document the CLI reads or writes.
json schema();

}  // namespace transit
