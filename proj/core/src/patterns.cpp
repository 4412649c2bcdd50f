#include "transit/patterns.hpp"

#include <string>

#include "transit/error.hpp"

namespace transit {

namespace {

// Edges given as pairs of role names.
Pattern make(std::string name, std::vector<std::string> roles,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  GroundSet ground(roles.size(), roles);
  Graph g(ground);
  for (const auto& [a, b] : edges) g.add_edge(*ground.index_of(a), *ground.index_of(b));
  return Pattern{std::move(name), std::move(g)};
}

// Base edges ux, xv, xy, yw plus the selected optional ones.
Pattern family_member(std::string name, bool uw, bool vw, bool xw, bool uv) {
  std::vector<std::pair<std::string, std::string>> edges = {
      {"u", "x"}, {"x", "v"}, {"x", "y"}, {"y", "w"}};
  if (uw) edges.emplace_back("u", "w");
  if (vw) edges.emplace_back("v", "w");
  if (xw) edges.emplace_back("x", "w");
  if (uv) edges.emplace_back("u", "v");
  return make(std::move(name), {"u", "v", "x", "y", "w"}, edges);
}

std::vector<Pattern> build_family() {
  return {
      family_member("F", false, false, false, false),
      family_member("P", true, false, false, false),
      family_member("P_bar", false, false, false, true),
      family_member("K14_plus", false, false, true, false),
      family_member("K23", true, true, false, false),
      family_member("P_plus", true, false, true, false),
      family_member("H", true, false, false, true),
      family_member("M33", false, false, true, true),
      family_member("S23", true, true, true, false),
      family_member("K23_plus", true, true, false, true),
      family_member("F3", true, false, true, true),
      family_member("S23_plus", true, true, true, true),
  };
}

std::vector<Pattern> build_library() {
  std::vector<Pattern> lib = {
      make("house", {"u", "v", "x", "c", "d"},
           {{"v", "x"}, {"x", "c"}, {"c", "d"}, {"d", "v"}, {"c", "u"}, {"d", "u"}}),
      make("domino", {"u", "v", "x", "c", "d", "f"},
           {{"v", "x"}, {"x", "c"}, {"c", "d"}, {"d", "v"}, {"c", "f"}, {"f", "u"}, {"u", "d"}}),
      make("A", {"u", "v", "x", "y", "c", "d"},
           {{"c", "y"}, {"y", "x"}, {"x", "d"}, {"d", "c"}, {"v", "c"}, {"u", "d"}}),
      make("fan3", {"p1", "p2", "p3", "p4", "z"},
           {{"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}, {"z", "p1"}, {"z", "p2"}, {"z", "p3"},
            {"z", "p4"}}),
      make("claw", {"c", "u", "x", "v"}, {{"c", "u"}, {"c", "x"}, {"c", "v"}}),
      make("P4", {"u", "x", "y", "v"}, {{"u", "x"}, {"x", "y"}, {"y", "v"}}),
      make("C4", {"u", "x", "y", "v"}, {{"u", "x"}, {"x", "y"}, {"y", "v"}, {"v", "u"}}),
      // u, y of degree three.
      make("diamond", {"u", "x", "y", "v"},
           {{"u", "x"}, {"x", "y"}, {"y", "v"}, {"u", "y"}, {"u", "v"}}),
      // Triangle u, x, y with v pendant at y.
      make("paw", {"u", "x", "y", "v"}, {{"u", "x"}, {"x", "y"}, {"u", "y"}, {"y", "v"}}),
      make("triangle", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
  };
  for (auto& p : family_A()) lib.push_back(p);
  return lib;
}

struct Embedder {
  const Graph& g;
  const Graph& p;
  std::vector<std::size_t> image;
  Subset used;

  bool extend(std::size_t i) {
    if (i == p.size()) return true;
    for (std::size_t h = 0; h < g.size(); ++h) {
      if (used.contains(h) || g.degree(h) < p.degree(i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = p.adjacent(i, j) == g.adjacent(h, image[j]);
      }
      if (!ok) continue;
      image[i] = h;
      used.insert(h);
      if (extend(i + 1)) return true;
      used.erase(h);
    }
    return false;
  }
};

}  // namespace

const std::vector<Pattern>& family_A() {
  static const std::vector<Pattern> family = build_family();
  return family;
}

const std::vector<Pattern>& pattern_library() {
  static const std::vector<Pattern> lib = build_library();
  return lib;
}

const Pattern& pattern(std::string_view name) {
  for (const auto& p : pattern_library()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::kMalformedInput, "unknown pattern " + std::string(name));
}

std::optional<std::vector<std::size_t>> contains_induced(const Graph& g, const Pattern& p) {
  if (p.graph.size() > 8) throw Error(ErrorCode::kGroundTooLarge, "patterns are limited to 8 vertices");
  if (p.graph.size() > g.size()) return std::nullopt;
  Embedder e{g, p.graph, std::vector<std::size_t>(p.graph.size()), Subset{}};
  if (e.extend(0)) return e.image;
  return std::nullopt;
}

}  // namespace transit
