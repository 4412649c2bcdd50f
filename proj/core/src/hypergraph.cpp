#include "transit/hypergraph.hpp"

#include <random>
#include <string>

#include "transit/error.hpp"

namespace transit {

namespace {

// Component of `start` using only vertices in `alive` and edges avoiding `dead`.
Subset component(const Hypergraph& h, std::size_t start, Subset alive, Subset dead) {
  Subset seen = Subset::singleton(start);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Subset e : h.edges()) {
      if (e.intersects(dead) || !e.intersects(seen)) continue;
      const Subset add = (e & alive) - seen;
      if (!add.empty()) {
        seen |= add;
        grew = true;
      }
    }
  }
  return seen;
}

void require_connected(const Hypergraph& h) {
  if (!hyper_connected(h)) throw Error(ErrorCode::kNotConnected, "hypergraph is not connected");
}

}  // namespace

Hypergraph::Hypergraph(GroundSet ground, std::vector<Subset> edges)
    : ground_(std::move(ground)), edges_(std::move(edges)) {
  for (Subset e : edges_) {
    if (e.empty()) throw Error(ErrorCode::kMalformedInput, "hyperedges are nonempty");
    if (!ground_.contains(e)) throw Error(ErrorCode::kIndexOutOfRange, "hyperedge leaves the ground set");
  }
}

bool hyper_connected(const Hypergraph& h) {
  const Subset all = h.ground().full();
  return component(h, 0, all, Subset{}) == all;
}

Hypergraph strong_delete(const Hypergraph& h, std::size_t v) {
  h.ground().check_index(v);
  if (h.size() == 1) throw Error(ErrorCode::kMalformedInput, "cannot delete the only vertex");
  auto squeeze = [v](Subset s) {
    const Subset::word_type low = s.bits() & ((Subset::word_type{1} << v) - 1);
    const Subset::word_type high = v + 1 >= 64 ? 0 : (s.bits() >> (v + 1)) << v;
    return Subset(low | high);
  };
  std::vector<std::string> labels;
  if (h.ground().has_labels()) {
    labels = h.ground().labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
  }
  std::vector<Subset> edges;
  for (Subset e : h.edges()) {
    if (!e.contains(v)) edges.push_back(squeeze(e));
  }
  return Hypergraph(GroundSet(h.size() - 1, std::move(labels)), std::move(edges));
}

Subset strong_cut_vertices(const Hypergraph& h) {
  require_connected(h);
  const Subset all = h.ground().full();
  Subset cuts;
  if (h.size() < 3) return cuts;
  for (std::size_t x = 0; x < h.size(); ++x) {
    const Subset rest = all.without(x);
    if (component(h, rest.min(), rest, Subset::singleton(x)) != rest) cuts.insert(x);
  }
  return cuts;
}

TransitFunction cutvertex_C_hyper(const Hypergraph& h) {
  require_connected(h);
  const std::size_t n = h.size();
  const Subset all = h.ground().full();
  // reach[x][u]: component of u after deleting x.
  std::vector<Subset> reach(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Subset rest = all.without(x);
    for (std::size_t u : rest) reach[x * n + u] = component(h, u, rest, Subset::singleton(x));
  }
  return TransitFunction::from_function(h.ground(), [&](std::size_t u, std::size_t v) {
    Subset s = Subset::pair(u, v);
    for (std::size_t x = 0; x < n; ++x) {
      if (x != u && x != v && !reach[x * n + u].contains(v)) s.insert(x);
    }
    return s;
  });
}

Hypergraph random_hypergraph(std::size_t n, std::size_t edges, std::uint64_t seed, double density) {
  if (density <= 0.0 || density > 1.0) {
    throw Error(ErrorCode::kMalformedInput, "density must lie in (0, 1]");
  }
  GroundSet ground(n);
  std::mt19937_64 rng(seed);
  std::vector<Subset> out;
  while (out.size() < edges) {
    Subset e;
    for (std::size_t v = 0; v < n; ++v) {
      if (unit_interval(rng()) < density) e.insert(v);
    }
    if (!e.empty()) out.push_back(e);
  }
  return Hypergraph(std::move(ground), std::move(out));
}

}  // namespace transit
