#include "transit/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "transit/error.hpp"

namespace transit {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t read_n(const json& j) {
  const std::size_t n = index_value(field(j, "n"), "\"n\"");
  if (n == 0) malformed("\"n\" must be positive");
  if (n > kMaxGround) throw Error(ErrorCode::kGroundTooLarge, "n = " + std::to_string(n) + " exceeds 64");
  return n;
}

GroundSet read_ground(const json& j) {
  const std::size_t n = read_n(j);
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) malformed("\"labels\" must be an array of strings");
    for (const json& l : *it) {
      if (!l.is_string()) malformed("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return GroundSet(n, std::move(labels));
}

void write_ground(json& out, const GroundSet& ground) {
  out["n"] = ground.size();
  if (ground.has_labels()) out["labels"] = ground.labels();
}

std::vector<Subset> read_sets(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  std::vector<Subset> out;
  for (const json& s : arr) out.push_back(subset_from_json(s));
  return out;
}

}  // namespace

json subset_to_json(Subset s) {
  json out = json::array();
  for (std::size_t e : s) out.push_back(e);
  return out;
}

Subset subset_from_json(const json& j) {
  if (!j.is_array()) malformed("a set must be an array of indices");
  Subset s;
  for (const json& e : j) {
    const std::size_t i = index_value(e, "set element");
    if (i >= kMaxGround) throw Error(ErrorCode::kIndexOutOfRange, "index " + std::to_string(i));
    s.insert(i);
  }
  return s;
}

json transit_to_json(const TransitFunction& r) {
  json out;
  write_ground(out, r.ground());
  json entries = json::array();
  for (const TransitEntry& e : r.nondefault_entries()) {
    entries.push_back({{"u", e.u}, {"v", e.v}, {"set", subset_to_json(e.set)}});
  }
  out["entries"] = std::move(entries);
  return out;
}

TransitFunction transit_from_json(const json& j) {
  GroundSet ground = read_ground(j);
  std::vector<TransitEntry> entries;
  if (auto it = j.find("entries"); it != j.end()) {
    if (!it->is_array()) malformed("\"entries\" must be an array");
    for (const json& e : *it) {
      entries.push_back({index_value(field(e, "u"), "\"u\""), index_value(field(e, "v"), "\"v\""),
                         subset_from_json(field(e, "set"))});
    }
  }
  return make_transit_function(std::move(ground), entries);
}

json graph_to_json(const Graph& g) {
  json out;
  write_ground(out, g.ground());
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const json& j) {
  GroundSet ground = read_ground(j);
  Graph g(std::move(ground));
  const json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("\"edges\" must be an array");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("graph edges are [u, v] pairs");
    g.add_edge(index_value(e[0], "edge end"), index_value(e[1], "edge end"));
  }
  return g;
}

json setsystem_to_json(const SetSystem& c) {
  json out;
  write_ground(out, c.ground());
  json members = json::array();
  for (Subset s : c.members()) members.push_back(subset_to_json(s));
  out["members"] = std::move(members);
  return out;
}

SetSystem setsystem_from_json(const json& j) {
  GroundSet ground = read_ground(j);
  return SetSystem(std::move(ground), read_sets(j, "members"));
}

json hypergraph_to_json(const Hypergraph& h) {
  json out;
  write_ground(out, h.ground());
  json edges = json::array();
  for (Subset e : h.edges()) edges.push_back(subset_to_json(e));
  out["edges"] = std::move(edges);
  return out;
}

Hypergraph hypergraph_from_json(const json& j) {
  GroundSet ground = read_ground(j);
  return Hypergraph(std::move(ground), read_sets(j, "edges"));
}

json verdict_to_json(const AxiomVerdict& v) {
  json out{{"axiom", v.axiom}, {"holds", v.holds}};
  json witness = json::array();
  for (const WitnessEntry& w : v.witness) witness.push_back({{"role", w.role}, {"index", w.index}});
  out["witness"] = std::move(witness);
  if (v.witness_set) out["set"] = subset_to_json(*v.witness_set);
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

json profile_to_json(const AxiomProfile& p) {
  json out = json::object();
  for (AxiomId a : kAllAxioms) out[std::string(identifier(a))] = verdict_to_json(p[a]);
  return out;
}

json certificate_to_json(const GeometryCertificate& c) {
  json out{{"is_geometry", c.is_geometry},
           {"mkm", c.mkm},
           {"anti_exchange", c.anti_exchange},
           {"extension", c.extension}};
  if (c.mkm_violator) out["mkm_violator"] = subset_to_json(*c.mkm_violator);
  if (c.anti_exchange_violator) {
    const auto& v = *c.anti_exchange_violator;
    out["anti_exchange_violator"] = {{"convex", subset_to_json(v.convex)}, {"p", v.p}, {"q", v.q}};
  }
  if (c.stuck) out["stuck"] = subset_to_json(*c.stuck);
  if (c.is_geometry) out["chain"] = c.chain;
  return out;
}

json family_to_json(const ConvexFamily& f) {
  json sets = json::array();
  for (Subset s : f) sets.push_back(subset_to_json(s));
  return {{"count", f.size()}, {"sets", std::move(sets)}};
}

json k_report_to_json(const KAxiomReport& k) {
  return {{"ks", verdict_to_json(k.ks)}, {"kr", verdict_to_json(k.kr)}, {"kc", verdict_to_json(k.kc)},
          {"k1", verdict_to_json(k.k1)}, {"k2", verdict_to_json(k.k2)}, {"t_system", k.is_t_system()}};
}

json report_to_json(const TheoremReport& r) {
  return {{"theorem", theorem_name(r.theorem)},
          {"statement", theorem_statement(r.theorem)},
          {"kind", r.kind == TheoremKind::iff ? "iff" : "implies"},
          {"n_range", {r.n_min, r.n_max}},
          {"checked", r.checked},
          {"lhs_true", r.lhs_true},
          {"rhs_true", r.rhs_true},
          {"mismatches", r.mismatches},
          {"ok", r.ok()}};
}

json schema() {
  const json index_set = {{"type", "array"}, {"items", {{"type", "integer"}, {"minimum", 0}}}};
  const json ground = {{"n", {{"type", "integer"}, {"minimum", 1}, {"maximum", 64}}},
                       {"labels", {{"type", "array"}, {"items", {{"type", "string"}}}}}};
  json transit = {{"type", "object"}, {"required", {"n"}}, {"properties", ground}};
  transit["properties"]["entries"] = {
      {"type", "array"},
      {"items",
       {{"type", "object"},
        {"required", {"u", "v", "set"}},
        {"properties", {{"u", {{"type", "integer"}}}, {"v", {{"type", "integer"}}}, {"set", index_set}}}}}};
  json graph = {{"type", "object"}, {"required", {"n", "edges"}}, {"properties", ground}};
  graph["properties"]["edges"] = {{"type", "array"},
                                  {"items", {{"type", "array"}, {"minItems", 2}, {"maxItems", 2}}}};
  json setsys = {{"type", "object"}, {"required", {"n", "members"}}, {"properties", ground}};
  setsys["properties"]["members"] = {{"type", "array"}, {"items", index_set}};
  json hyper = {{"type", "object"}, {"required", {"n", "edges"}}, {"properties", ground}};
  hyper["properties"]["edges"] = {{"type", "array"}, {"items", index_set}};
  const json verdict = {
      {"type", "object"},
      {"required", {"axiom", "holds", "witness"}},
      {"properties",
       {{"axiom", {{"type", "string"}}},
        {"holds", {{"type", "boolean"}}},
        {"witness",
         {{"type", "array"},
          {"items", {{"type", "object"}, {"properties", {{"role", {{"type", "string"}}}, {"index", {{"type", "integer"}}}}}}}}},
        {"set", index_set},
        {"detail", {{"type", "string"}}}}}};
  const json certificate = {{"type", "object"},
                            {"required", {"is_geometry", "mkm", "anti_exchange", "extension"}},
                            {"properties",
                             {{"is_geometry", {{"type", "boolean"}}},
                              {"mkm", {{"type", "boolean"}}},
                              {"anti_exchange", {{"type", "boolean"}}},
                              {"extension", {{"type", "boolean"}}},
                              {"mkm_violator", index_set},
                              {"stuck", index_set},
                              {"chain", index_set}}}};
  const json report = {{"type", "object"},
                       {"required", {"theorem", "checked", "lhs_true", "rhs_true", "mismatches"}},
                       {"properties",
                        {{"theorem", {{"type", "string"}}},
                         {"kind", {{"enum", {"iff", "implies"}}}},
                         {"n_range", index_set},
                         {"checked", {{"type", "integer"}}},
                         {"lhs_true", {{"type", "integer"}}},
                         {"rhs_true", {{"type", "integer"}}},
                         {"mismatches", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}};
  return {{"schema_version", kSchemaVersion},
          {"transit_function", transit},
          {"graph", graph},
          {"set_system", setsys},
          {"hypergraph", hyper},
          {"verdict", verdict},
          {"geometry_certificate", certificate},
          {"theorem_report", report}};
}

}  // namespace transit
