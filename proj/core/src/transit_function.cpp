#include "transit/transit_function.hpp"

#include <random>
#include <string>

#include "transit/error.hpp"

namespace transit {

namespace {

std::string pair_name(const GroundSet& g, std::size_t u, std::size_t v) {
  return "(" + g.name(u) + "," + g.name(v) + ")";
}

}  // namespace

TransitFunction::TransitFunction(GroundSet ground)
    : ground_(std::move(ground)), n_(ground_.size()), table_(n_ * n_) {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) table_[u * n_ + v] = Subset::pair(u, v);
  }
}

TransitFunction TransitFunction::from_function(
    GroundSet ground, const std::function<Subset(std::size_t, std::size_t)>& f) {
  TransitFunction r(std::move(ground));
  const std::size_t n = r.n_;
  const Subset full = r.full();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      Subset s = f(u, v);
      if (!s.is_subset_of(full)) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "transit set " + pair_name(r.ground_, u, v) + " leaves the ground set");
      }
      if (!s.contains(u) || !s.contains(v)) {
        throw Error(ErrorCode::kAxiomViolation,
                    "t1 fails at " + pair_name(r.ground_, u, v));
      }
      r.table_[u * n + v] = s;
      r.table_[v * n + u] = s;
    }
  }
  return r;
}

Subset TransitFunction::transit_set(std::size_t u, std::size_t v) const {
  ground_.check_index(u);
  ground_.check_index(v);
  return (*this)(u, v);
}

std::vector<TransitEntry> TransitFunction::nondefault_entries() const {
  std::vector<TransitEntry> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      Subset s = (*this)(u, v);
      if (s != Subset::pair(u, v)) out.push_back({u, v, s});
    }
  }
  return out;
}

TransitFunction make_transit_function(GroundSet ground, const std::vector<TransitEntry>& entries) {
  const std::size_t n = ground.size();
  std::vector<Subset> given(n * n);
  std::vector<bool> seen(n * n, false);
  for (const auto& e : entries) {
    ground.check_index(e.u);
    ground.check_index(e.v);
    if (!ground.contains(e.set)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "transit set " + pair_name(ground, e.u, e.v) + " leaves the ground set");
    }
    const std::size_t lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    if (seen[lo * n + hi]) {
      throw Error(ErrorCode::kDuplicatePair, "pair " + pair_name(ground, lo, hi) + " listed twice");
    }
    seen[lo * n + hi] = true;
    if (lo == hi) {
      if (e.set != Subset::singleton(lo)) {
        throw Error(ErrorCode::kAxiomViolation, "t3 fails at " + pair_name(ground, lo, hi));
      }
      continue;
    }
    if (!e.set.contains(lo) || !e.set.contains(hi)) {
      throw Error(ErrorCode::kAxiomViolation, "t1 fails at " + pair_name(ground, lo, hi));
    }
    given[lo * n + hi] = e.set;
  }
  return TransitFunction::from_function(std::move(ground), [&](std::size_t u, std::size_t v) {
    return seen[u * n + v] ? given[u * n + v] : Subset::pair(u, v);
  });
}

TransitFunction transit_from_labels(const std::vector<std::string>& labels,
                                    const std::vector<std::pair<std::string, std::string>>& entries) {
  GroundSet ground(labels.size(), labels);
  auto index = [&](char c) {
    auto i = ground.index_of(std::string(1, c));
    if (!i) throw Error(ErrorCode::kMalformedInput, std::string("unknown label ") + c);
    return *i;
  };
  std::vector<TransitEntry> parsed;
  for (const auto& [pair, set] : entries) {
    if (pair.size() != 2) throw Error(ErrorCode::kMalformedInput, "pair must name two labels: " + pair);
    Subset s;
    for (char c : set) s.insert(index(c));
    parsed.push_back({index(pair[0]), index(pair[1]), s});
  }
  return make_transit_function(std::move(ground), parsed);
}

Betweenness::Betweenness(GroundSet ground)
    : ground_(std::move(ground)), n_(ground_.size()), table_(n_ * n_) {}

Betweenness Betweenness::from_function(GroundSet ground,
                                       const std::function<Subset(std::size_t, std::size_t)>& f) {
  Betweenness b(std::move(ground));
  const std::size_t n = b.n_;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      Subset s = f(u, v);
      if (!b.ground_.contains(s)) {
        throw Error(ErrorCode::kIndexOutOfRange, "betweenness set leaves the ground set");
      }
      if (s.contains(u) || s.contains(v)) {
        throw Error(ErrorCode::kAxiomViolation,
                    "endpoint inside B" + pair_name(b.ground_, u, v));
      }
      b.table_[u * n + v] = s;
      b.table_[v * n + u] = s;
    }
  }
  return b;
}

Betweenness to_betweenness(const TransitFunction& r) {
  return Betweenness::from_function(r.ground(), [&](std::size_t u, std::size_t v) {
    return r(u, v) - Subset::pair(u, v);
  });
}

TransitFunction random_transit_function(std::size_t n, std::uint64_t seed, double density) {
  if (density < 0.0 || density > 1.0) {
    throw Error(ErrorCode::kMalformedInput, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  return TransitFunction::from_function(GroundSet(n), [&](std::size_t u, std::size_t v) {
    Subset s = Subset::pair(u, v);
    for (std::size_t w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (unit_interval(rng()) < density) s.insert(w);
    }
    return s;
  });
}

}  // namespace transit
