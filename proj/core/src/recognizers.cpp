#include "transit/recognizers.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "transit/error.hpp"

namespace transit {

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t min_length;
  std::vector<std::size_t> path;
  Subset on_path;

  // path = s, p1, ..., pm; blocked = N(p1) ∪ ... ∪ N(p_{m-1}).
  bool extend(Subset blocked) {
    const std::size_t s = path.front(), last = path.back();
    const std::size_t m = path.size() - 1;
    const Subset above = Subset::full(g.size()) - Subset::full(s + 1);
    for (std::size_t w : (g.neighbors(last) & above) - on_path - blocked) {
      if (m >= 1 && g.adjacent(w, s)) {
        if (m + 2 >= min_length) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      on_path.insert(w);
      if (extend(m >= 1 ? blocked | g.neighbors(last) : blocked)) return true;
      on_path.erase(w);
      path.pop_back();
    }
    return false;
  }
};

AxiomVerdict pattern_verdict(std::string_view cls, const Graph& g,
                             std::initializer_list<std::string_view> names) {
  for (std::string_view name : names) {
    const Pattern& p = pattern(name);
    if (auto image = contains_induced(g, p)) {
      std::vector<WitnessEntry> w;
      for (std::size_t i = 0; i < image->size(); ++i) {
        w.push_back({p.graph.ground().name(i), (*image)[i]});
      }
      AxiomVerdict v = AxiomVerdict::fail(std::string(cls), std::move(w),
                                          Subset::from_indices(*image));
      v.detail = p.name;
      return v;
    }
  }
  return AxiomVerdict::pass(std::string(cls));
}

AxiomVerdict cycle_verdict(std::string_view cls, const std::vector<std::size_t>& cycle) {
  std::vector<WitnessEntry> w;
  for (std::size_t i = 0; i < cycle.size(); ++i) w.push_back({"c" + std::to_string(i), cycle[i]});
  AxiomVerdict v = AxiomVerdict::fail(std::string(cls), std::move(w), Subset::from_indices(cycle));
  v.detail = cycle.size() >= 5 ? "hole" : "cycle";
  return v;
}

AxiomVerdict chordal_verdict(const Graph& g) {
  if (is_chordal(g)) return AxiomVerdict::pass("chordal");
  auto cycle = find_induced_cycle(g, 4);
  if (!cycle) {
    throw Error(ErrorCode::kInternalDisagreement, "no induced cycle in a non-chordal graph");
  }
  return cycle_verdict("chordal", *cycle);
}

AxiomVerdict renamed(AxiomVerdict v, std::string_view cls) {
  v.axiom = std::string(cls);
  return v;
}

AxiomVerdict hole_or_patterns(std::string_view cls, const Graph& g,
                              std::initializer_list<std::string_view> names) {
  for (std::string_view name : names) {
    AxiomVerdict v = pattern_verdict(cls, g, {name});
    if (!v.holds) return v;
    if (name == "house") {
      if (auto hole = find_induced_cycle(g, 5)) return cycle_verdict(cls, *hole);
    }
  }
  return AxiomVerdict::pass(std::string(cls));
}

AxiomVerdict acyclic_verdict(std::string_view cls, const Graph& g) {
  if (auto cycle = find_induced_cycle(g, 3)) return cycle_verdict(cls, *cycle);
  return AxiomVerdict::pass(std::string(cls));
}

}  // namespace

std::string_view class_name(ClassId c) {
  switch (c) {
    case ClassId::chordal: return "chordal";
    case ClassId::ptolemaic: return "ptolemaic";
    case ClassId::interval: return "interval";
    case ClassId::proper_interval: return "proper_interval";
    case ClassId::hhd_free: return "hhd_free";
    case ClassId::weak_bipolarizable: return "weak_bipolarizable";
    case ClassId::block_graph: return "block_graph";
    case ClassId::tree: return "tree";
    case ClassId::star_forest: return "star_forest";
    case ClassId::triangle_free: return "triangle_free";
    case ClassId::p3_j0_class: return "p3_j0_class";
    case ClassId::family_A_free: return "family_A_free";
    case ClassId::claw_free: return "claw_free";
    case ClassId::two_connected_or_tree_components: return "two_connected_or_tree_components";
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view text) {
  std::string t(text);
  for (char& c : t) {
    c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (ClassId c : kAllClasses) {
    std::string name(class_name(c));
    for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (name == t) return c;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> perfect_elimination_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> visit;
  Subset numbered;
  while (visit.size() < n) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered.contains(v)) continue;
      if (best == n || weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    numbered.insert(best);
    for (std::size_t w : g.neighbors(best)) ++weight[w];
  }
  std::vector<std::size_t> order(visit.rbegin(), visit.rend());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  for (std::size_t v = 0; v < n; ++v) {
    Subset later;
    for (std::size_t w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.insert(w);
    }
    if (later.empty()) continue;
    std::size_t parent = later.min();
    for (std::size_t w : later) {
      if (pos[w] < pos[parent]) parent = w;
    }
    if (!(later.without(parent)).is_subset_of(g.neighbors(parent))) return std::nullopt;
  }
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

std::optional<std::vector<std::size_t>> find_induced_cycle(const Graph& g, std::size_t min_length) {
  if (g.size() > kMaxCycleSearchGround) {
    throw Error(ErrorCode::kGroundTooLarge,
                "induced-cycle search needs n <= " + std::to_string(kMaxCycleSearchGround));
  }
  min_length = std::max<std::size_t>(min_length, 3);
  for (std::size_t s = 0; s < g.size(); ++s) {
    CycleSearch search{g, min_length, {s}, Subset::singleton(s)};
    if (search.extend(Subset{})) return search.path;
  }
  return std::nullopt;
}

std::optional<Subset> has_hole(const Graph& g) {
  if (auto cycle = find_induced_cycle(g, 5)) return Subset::from_indices(*cycle);
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> has_asteroidal_triple(const Graph& g) {
  const std::size_t n = g.size();
  // comp[z][v]: component id of v in G - N[z], or n when v ∈ N[z].
  std::vector<std::vector<std::size_t>> comp(n, std::vector<std::size_t>(n, n));
  for (std::size_t z = 0; z < n; ++z) {
    Subset rest = g.vertices() - g.closed_neighbors(z);
    std::size_t id = 0;
    while (!rest.empty()) {
      const Subset c = reach_within(g, rest.min(), rest);
      for (std::size_t v : c) comp[z][v] = id;
      ++id;
      rest -= c;
    }
  }
  auto joined = [&](std::size_t a, std::size_t b, std::size_t avoid) {
    return comp[avoid][a] != n && comp[avoid][a] == comp[avoid][b];
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      for (std::size_t z = y + 1; z < n; ++z) {
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        if (joined(x, y, z) && joined(x, z, y) && joined(y, z, x)) {
          return std::array<std::size_t, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

AxiomVerdict recognize(const Graph& g, ClassId c) {
  const std::string_view name = class_name(c);
  switch (c) {
    case ClassId::chordal:
      return chordal_verdict(g);
    case ClassId::ptolemaic: {
      AxiomVerdict v = chordal_verdict(g);
      if (!v.holds) return renamed(v, name);
      return pattern_verdict(name, g, {"fan3"});
    }
    case ClassId::interval: {
      AxiomVerdict v = chordal_verdict(g);
      if (!v.holds) return renamed(v, name);
      if (auto at = has_asteroidal_triple(g)) {
        AxiomVerdict fail = AxiomVerdict::fail(
            std::string(name), {{"x", (*at)[0]}, {"y", (*at)[1]}, {"z", (*at)[2]}},
            Subset{(*at)[0], (*at)[1], (*at)[2]});
        fail.detail = "asteroidal_triple";
        return fail;
      }
      return AxiomVerdict::pass(std::string(name));
    }
    case ClassId::proper_interval: {
      AxiomVerdict v = recognize(g, ClassId::interval);
      if (!v.holds) return renamed(v, name);
      return pattern_verdict(name, g, {"claw"});
    }
    case ClassId::hhd_free:
      return hole_or_patterns(name, g, {"house", "domino"});
    case ClassId::weak_bipolarizable:
      return hole_or_patterns(name, g, {"house", "domino", "A"});
    case ClassId::block_graph: {
      for (Subset b : blocks(g).blocks) {
        for (std::size_t u : b) {
          const Subset missing = b - g.closed_neighbors(u);
          if (!missing.empty()) {
            AxiomVerdict fail = AxiomVerdict::fail(std::string(name), {{"u", u}, {"v", missing.min()}}, b);
            fail.detail = "incomplete_block";
            return fail;
          }
        }
      }
      return AxiomVerdict::pass(std::string(name));
    }
    case ClassId::tree: {
      if (!is_connected(g)) {
        const Subset first = reach_within(g, 0, g.vertices());
        AxiomVerdict fail =
            AxiomVerdict::fail(std::string(name), {{"u", 0}, {"v", (g.vertices() - first).min()}});
        fail.detail = "disconnected";
        return fail;
      }
      return acyclic_verdict(name, g);
    }
    case ClassId::star_forest: {
      AxiomVerdict v = acyclic_verdict(name, g);
      if (!v.holds) return v;
      return pattern_verdict(name, g, {"P4"});
    }
    case ClassId::triangle_free:
      return pattern_verdict(name, g, {"triangle"});
    case ClassId::p3_j0_class:
      return pattern_verdict(name, g, {"P4", "C4", "diamond", "paw"});
    case ClassId::family_A_free: {
      for (const Pattern& p : family_A()) {
        AxiomVerdict v = pattern_verdict(name, g, {p.name});
        if (!v.holds) return v;
      }
      return AxiomVerdict::pass(std::string(name));
    }
    case ClassId::claw_free:
      return pattern_verdict(name, g, {"claw"});
    case ClassId::two_connected_or_tree_components: {
      Subset rest = g.vertices();
      while (!rest.empty()) {
        const Subset comp = reach_within(g, rest.min(), rest);
        rest -= comp;
        const Graph h = g.induced(comp);
        if (h.edge_count() + 1 == h.size()) continue;
        const BlockDecomposition bd = blocks(h);
        if (!bd.cut_vertices.empty()) {
          const std::vector<std::size_t> members = comp.to_vector();
          AxiomVerdict fail =
              AxiomVerdict::fail(std::string(name), {{"c", members[bd.cut_vertices.min()]}}, comp);
          fail.detail = "cut_vertex";
          return fail;
        }
      }
      return AxiomVerdict::pass(std::string(name));
    }
  }
  throw Error(ErrorCode::kMalformedInput, "unknown class");
}

AxiomVerdict ptolemy_inequality_holds(const Graph& g) {
  require_connected(g);
  const DistanceMatrix d(g);
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t x = 0; x < n; ++x) {
          if (d(u, v) * d(w, x) + d(u, x) * d(v, w) < d(u, w) * d(v, x)) {
            return AxiomVerdict::fail("ptolemy", {{"u", u}, {"v", v}, {"w", w}, {"x", x}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("ptolemy");
}

}  // namespace transit
