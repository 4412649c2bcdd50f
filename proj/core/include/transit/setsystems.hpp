#pragma once

#include <cstdint>
#include <vector>

#include "transit/convexity.hpp"
#include "transit/transit_function.hpp"
#include "transit/verdict.hpp"

namespace transit {

/// A family of nonempty subsets, deduplicated and sorted by (size, bits).
class SetSystem {
 public:
  /// Throws kMalformedInput for an empty member, kIndexOutOfRange for a
  /// member leaving the ground set.
  SetSystem(GroundSet ground, std::vector<Subset> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Subset s) const;
  bool operator==(const SetSystem&) const = default;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

///   ks  every singleton is a member (witness "x")
///   kr  every member C has p, q ∈ C (p = q allowed) such that every member
///       containing p and q contains C (witness: set C)
///   kc  for p ≠ q the intersection of the members containing both is a
///       member; an empty family intersects to V (witness "p", "q")
///   k1  V is a member
///   k2  nonempty intersections of two members are members (witness: the
///       two members as "a", "b" indices into members(), set = A ∩ B)
struct KAxiomReport {
  AxiomVerdict ks, kr, kc, k1, k2;
  bool is_t_system() const { return ks.holds && kr.holds && kc.holds; }
};

KAxiomReport check_k_axioms(const SetSystem& c);

/// R_C(x,y) = intersection of the members containing x and y. Throws
/// kMissingSingleton without (KS) and kUncoveredPair when no member holds
/// both x and y.
TransitFunction canonical_transit(const SetSystem& c);

/// All R(x,y), singletons included.
SetSystem transit_set_system(const TransitFunction& r);

/// Holds iff the canonical transit function of R's transit sets is R. On
/// failure the witness names a pair (x, y) where they differ.
AxiomVerdict identifies(const TransitFunction& r);

/// Closure by intersecting the members that contain a set. With no such
/// member the closure is V when V is a member; otherwise kMalformedInput.
/// The closed sets are exactly the members when the family (with ∅ and V)
/// is intersection-closed.
class FamilyClosure final : public ClosureOperator {
 public:
  FamilyClosure(std::size_t n, std::vector<Subset> members);
  std::size_t ground_size() const override { return n_; }
  Subset closure(Subset s) const override;

 private:
  std::size_t n_;
  std::vector<Subset> members_;
  bool has_full_ = false;
};

/// True when every intersection of two members is a member.
bool intersection_closed(const std::vector<Subset>& family);

/// Convex-geometry test of the transit sets plus ∅. Requires (m), (a') and
/// (k); otherwise throws kHypothesesNotMet naming the first failure.
GeometryCertificate transit_system_is_convex_geometry(const TransitFunction& r);

/// Monotone transit function R* derived from random_transit_function.
TransitFunction random_monotone_transit_function(std::size_t n, std::uint64_t seed, double density);

}  // namespace transit
