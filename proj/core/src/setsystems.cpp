#include "transit/setsystems.hpp"

#include <algorithm>
#include <string>

#include "transit/axioms.hpp"
#include "transit/error.hpp"

namespace transit {

namespace {

bool by_size_bits(Subset a, Subset b) { return size_then_bits(a, b); }

void normalize(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(), by_size_bits);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  for (Subset m : members_) {
    if (m.empty()) throw Error(ErrorCode::kMalformedInput, "set systems have no empty member");
    if (!ground_.contains(m)) {
      throw Error(ErrorCode::kIndexOutOfRange, "member " + format_subset(ground_, m) + " leaves the ground set");
    }
  }
  normalize(members_);
}

bool SetSystem::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s, by_size_bits);
}

KAxiomReport check_k_axioms(const SetSystem& c) {
  const std::size_t n = c.ground().size();
  const Subset full = c.ground().full();
  const auto& members = c.members();
  KAxiomReport rep{AxiomVerdict::pass("KS"), AxiomVerdict::pass("KR"), AxiomVerdict::pass("KC"),
                   AxiomVerdict::pass("K1"), AxiomVerdict::pass("K2")};

  for (std::size_t x = 0; x < n; ++x) {
    if (!c.contains(Subset::singleton(x))) {
      rep.ks = AxiomVerdict::fail("KS", {{"x", x}});
      break;
    }
  }

  for (Subset m : members) {
    bool found = false;
    for (std::size_t p : m) {
      for (std::size_t q : m) {
        if (q < p) continue;
        const Subset pq = Subset::pair(p, q);
        found = std::all_of(members.begin(), members.end(), [&](Subset other) {
          return !pq.is_subset_of(other) || m.is_subset_of(other);
        });
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      rep.kr = AxiomVerdict::fail("KR", {}, m);
      break;
    }
  }

  for (std::size_t p = 0; p < n && rep.kc.holds; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      Subset meet = full;
      for (Subset m : members) {
        if (m.contains(p) && m.contains(q)) meet &= m;
      }
      if (!c.contains(meet)) {
        rep.kc = AxiomVerdict::fail("KC", {{"p", p}, {"q", q}}, meet);
        break;
      }
    }
  }

  if (!c.contains(full)) rep.k1 = AxiomVerdict::fail("K1", {}, full);

  for (std::size_t a = 0; a < members.size() && rep.k2.holds; ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Subset meet = members[a] & members[b];
      if (!meet.empty() && !c.contains(meet)) {
        rep.k2 = AxiomVerdict::fail("K2", {{"a", a}, {"b", b}}, meet);
        break;
      }
    }
  }
  return rep;
}

TransitFunction canonical_transit(const SetSystem& c) {
  const GroundSet& ground = c.ground();
  for (std::size_t x = 0; x < ground.size(); ++x) {
    if (!c.contains(Subset::singleton(x))) {
      throw Error(ErrorCode::kMissingSingleton, "no member {" + ground.name(x) + "}");
    }
  }
  return TransitFunction::from_function(ground, [&](std::size_t x, std::size_t y) {
    const Subset pair = Subset::pair(x, y);
    Subset meet = ground.full();
    bool covered = false;
    for (Subset m : c.members()) {
      if (pair.is_subset_of(m)) {
        meet &= m;
        covered = true;
      }
    }
    if (!covered) {
      throw Error(ErrorCode::kUncoveredPair,
                  "no member contains " + ground.name(x) + " and " + ground.name(y));
    }
    return meet;
  });
}

SetSystem transit_set_system(const TransitFunction& r) {
  std::vector<Subset> sets;
  for (std::size_t u = 0; u < r.size(); ++u) {
    for (std::size_t v = u; v < r.size(); ++v) sets.push_back(r(u, v));
  }
  return SetSystem(r.ground(), std::move(sets));
}

AxiomVerdict identifies(const TransitFunction& r) {
  const TransitFunction canon = canonical_transit(transit_set_system(r));
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = x + 1; y < r.size(); ++y) {
      if (canon(x, y) != r(x, y)) return AxiomVerdict::fail("identifies", {{"x", x}, {"y", y}}, canon(x, y));
    }
  }
  return AxiomVerdict::pass("identifies");
}

FamilyClosure::FamilyClosure(std::size_t n, std::vector<Subset> members)
    : n_(n), members_(std::move(members)) {
  const Subset full = Subset::full(n);
  for (Subset m : members_) {
    if (!m.is_subset_of(full)) throw Error(ErrorCode::kIndexOutOfRange, "member leaves the ground set");
    if (m == full) has_full_ = true;
  }
}

Subset FamilyClosure::closure(Subset s) const {
  Subset meet = Subset::full(n_);
  bool covered = false;
  for (Subset m : members_) {
    if (s.is_subset_of(m)) {
      meet &= m;
      covered = true;
    }
  }
  if (!covered && !has_full_) {
    throw Error(ErrorCode::kMalformedInput, "no member contains the set and V is not a member");
  }
  return meet;
}

bool intersection_closed(const std::vector<Subset>& family) {
  std::vector<Subset> sorted = family;
  normalize(sorted);
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (!std::binary_search(sorted.begin(), sorted.end(), sorted[a] & sorted[b], by_size_bits)) {
        return false;
      }
    }
  }
  return true;
}

GeometryCertificate transit_system_is_convex_geometry(const TransitFunction& r) {
  for (AxiomId a : {AxiomId::m, AxiomId::a_prime, AxiomId::k}) {
    if (!check_axiom(r, a).holds) {
      throw Error(ErrorCode::kHypothesesNotMet, "(" + std::string(label(a)) + ") fails");
    }
  }
  std::vector<Subset> family = transit_set_system(r).members();
  family.push_back(Subset{});
  return geometry_certificate(FamilyClosure(r.size(), std::move(family)));
}

TransitFunction random_monotone_transit_function(std::size_t n, std::uint64_t seed, double density) {
  return segment_transit(random_transit_function(n, seed, density));
}

}  // namespace transit
