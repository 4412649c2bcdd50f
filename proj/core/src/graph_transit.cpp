#include "transit/graph_transit.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "transit/error.hpp"

namespace transit {

namespace {

// Symmetric n*n table filled by per-source searches, then frozen.
class PairTable {
 public:
  explicit PairTable(std::size_t n) : n_(n), t_(n * n) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) t_[u * n + v] = Subset::pair(u, v);
    }
  }
  void add(std::size_t u, std::size_t v, Subset s) {
    t_[u * n_ + v] |= s;
    t_[v * n_ + u] |= s;
  }
  TransitFunction freeze(const GroundSet& ground) const {
    return TransitFunction::from_function(
        ground, [this](std::size_t u, std::size_t v) { return t_[u * n_ + v]; });
  }

 private:
  std::size_t n_;
  std::vector<Subset> t_;
};

void guard_induced_paths(const Graph& g) {
  if (g.size() > kMaxInducedPathGround) {
    throw Error(ErrorCode::kGroundTooLarge,
                "induced-path search needs n <= " + std::to_string(kMaxInducedPathGround));
  }
}

// Calls visit(endpoint, vertices, length) for every induced path leaving u.
template <typename Visit>
void induced_paths(const Graph& g, Subset path, std::size_t last, Subset blocked,
                   std::size_t length, Visit& visit) {
  const Subset next_blocked = blocked | g.closed_neighbors(last);
  for (std::size_t w : g.neighbors(last) - blocked - path) {
    const Subset extended = path.with(w);
    visit(w, extended, length + 1);
    induced_paths(g, extended, w, next_blocked, length + 1, visit);
  }
}

enum class PathKind { all, long_only };

TransitFunction induced_path_function(const Graph& g, PathKind kind) {
  require_connected(g);
  guard_induced_paths(g);
  PairTable table(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    auto visit = [&](std::size_t w, Subset vertices, std::size_t length) {
      if (w > u && (kind == PathKind::all || length >= 3)) table.add(u, w, vertices);
    };
    induced_paths(g, Subset::singleton(u), u, Subset{}, 0, visit);
  }
  return table.freeze(g.ground());
}

std::vector<Subset> components(const Graph& g, Subset allowed) {
  std::vector<Subset> out;
  while (!allowed.empty()) {
    const Subset c = reach_within(g, allowed.min(), allowed);
    out.push_back(c);
    allowed -= c;
  }
  return out;
}

}  // namespace

std::string_view model_name(Model m) {
  switch (m) {
    case Model::I: return "I";
    case Model::J: return "J";
    case Model::m3: return "m3";
    case Model::A: return "A";
    case Model::T: return "T";
    case Model::WT: return "WT";
    case Model::P3: return "P3";
    case Model::C: return "C";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view text) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  for (Model m : kAllModels) {
    if (lower(model_name(m)) == lower(text)) return m;
  }
  return std::nullopt;
}

TransitFunction interval_I(const Graph& g) {
  require_connected(g);
  return interval_I(g, DistanceMatrix(g));
}

TransitFunction interval_I(const Graph& g, const DistanceMatrix& d) {
  require_connected(g);
  const std::size_t n = g.size();
  return TransitFunction::from_function(g.ground(), [&](std::size_t u, std::size_t v) {
    Subset s;
    for (std::size_t w = 0; w < n; ++w) {
      if (d(u, w) + d(w, v) == d(u, v)) s.insert(w);
    }
    return s;
  });
}

TransitFunction induced_J(const Graph& g) { return induced_path_function(g, PathKind::all); }

TransitFunction m3(const Graph& g) { return induced_path_function(g, PathKind::long_only); }

TransitFunction all_paths_A(const Graph& g) {
  require_connected(g);
  const BlockDecomposition bd = blocks(g);
  return TransitFunction::from_function(g.ground(), [&](std::size_t u, std::size_t v) {
    Subset s = Subset::pair(u, v);
    for (std::size_t node : bd.tree_path(u, v)) {
      if (bd.is_block_node(node)) s |= bd.blocks[node];
    }
    return s;
  });
}

TransitFunction cutvertex_C(const Graph& g) {
  require_connected(g);
  const BlockDecomposition bd = blocks(g);
  return TransitFunction::from_function(g.ground(), [&](std::size_t u, std::size_t v) {
    Subset s = Subset::pair(u, v);
    for (std::size_t node : bd.tree_path(u, v)) {
      if (!bd.is_block_node(node)) s.insert(bd.cut_vertex_of_node[node - bd.blocks.size()]);
    }
    return s;
  });
}

TransitFunction toll_T(const Graph& g) {
  require_connected(g);
  return TransitFunction::from_function(g.ground(), [&](std::size_t u, std::size_t v) {
    Subset s = Subset::pair(u, v);
    if (g.adjacent(u, v)) return s;
    const Subset nu = g.neighbors(u), nv = g.neighbors(v);
    s |= nu & nv;
    const auto far = components(g, g.vertices() - g.closed_neighbors(u) - g.closed_neighbors(v));
    for (std::size_t a : nu - g.closed_neighbors(v)) {
      for (std::size_t b : nv - g.closed_neighbors(u)) {
        bool joined = g.adjacent(a, b);
        Subset through;
        for (Subset k : far) {
          if (g.neighbors(a).intersects(k) && g.neighbors(b).intersects(k)) {
            joined = true;
            through |= k;
          }
        }
        if (joined) s |= through | Subset::pair(a, b);
      }
    }
    return s;
  });
}

TransitFunction weak_toll_WT(const Graph& g) {
  require_connected(g);
  return TransitFunction::from_function(g.ground(), [&](std::size_t u, std::size_t v) {
    Subset s = Subset::pair(u, v);
    if (g.adjacent(u, v)) return s;
    const Subset nu = g.neighbors(u), nv = g.neighbors(v);
    const Subset base = g.vertices() - nu - nv - Subset::pair(u, v);
    for (std::size_t a : nu) {
      for (std::size_t b : nv) {
        if (a != b && (nv.contains(a) || nu.contains(b))) continue;
        const Subset reach = reach_within(g, a, base | Subset::pair(a, b));
        if (reach.contains(b)) s |= reach;
      }
    }
    return s;
  });
}

TransitFunction p3(const Graph& g) {
  return TransitFunction::from_function(g.ground(), [&](std::size_t u, std::size_t v) {
    return Subset::pair(u, v) | (g.neighbors(u) & g.neighbors(v));
  });
}

TransitFunction build_transit(const Graph& g, Model m) {
  switch (m) {
    case Model::I: return interval_I(g);
    case Model::J: return induced_J(g);
    case Model::m3: return m3(g);
    case Model::A: return all_paths_A(g);
    case Model::T: return toll_T(g);
    case Model::WT: return weak_toll_WT(g);
    case Model::P3: return p3(g);
    case Model::C: return cutvertex_C(g);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown model");
}

}  // namespace transit
