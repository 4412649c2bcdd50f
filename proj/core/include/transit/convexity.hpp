#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "transit/transit_function.hpp"
#include "transit/verdict.hpp"

namespace transit {

/// Exponential enumerations refuse ground sets above this size.
inline constexpr std::size_t kMaxEnumerableGround = 24;

/// A closure operator on {0, ..., n-1} whose closed sets form a convexity
/// (∅ and V closed, closed under intersection).
class ClosureOperator {
 public:
  virtual ~ClosureOperator() = default;
  virtual std::size_t ground_size() const = 0;
  virtual Subset closure(Subset s) const = 0;
  virtual bool is_closed(Subset s) const { return closure(s) == s; }
};

/// R-convexity: closure is the hull, closed sets are the R-convex sets.
/// Holds a reference; the transit function must outlive it.
class TransitClosure final : public ClosureOperator {
 public:
  explicit TransitClosure(const TransitFunction& r) : r_(r) {}
  std::size_t ground_size() const override { return r_.size(); }
  Subset closure(Subset s) const override;
  bool is_closed(Subset s) const override;

 private:
  const TransitFunction& r_;
};

/// Closed sets of a convexity, deduplicated and sorted by (size, bits).
class ConvexFamily {
 public:
  ConvexFamily() = default;
  explicit ConvexFamily(std::vector<Subset> sets);

  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Subset s) const;
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  bool operator==(const ConvexFamily&) const = default;

 private:
  std::vector<Subset> sets_;
};

/// R(u,v) ⊆ S for all u, v ∈ S.
bool is_convex(const TransitFunction& r, Subset s);

/// Smallest R-convex superset of s (worklist fixpoint).
Subset hull(const TransitFunction& r, Subset s);

/// All closed sets, enumerated in lectic order by repeated closure
/// (NextClosure) and returned sorted. Throws kGroundTooLarge above 24.
ConvexFamily closed_sets(const ClosureOperator& op);
ConvexFamily convex_sets(const TransitFunction& r);

/// Reference mode: tests every one of the 2^n subsets. Throws
/// kGroundTooLarge above 24.
ConvexFamily convex_sets_bruteforce(const TransitFunction& r);

/// {k ∈ K : K \ {k} closed}. Throws kNotConvex when K is not closed.
Subset extreme_points(const ClosureOperator& op, Subset k);
Subset extreme_points(const TransitFunction& r, Subset k);

struct AntiExchangeViolation {
  Subset convex;
  std::size_t p = 0;
  std::size_t q = 0;
  bool operator==(const AntiExchangeViolation&) const = default;
};

/// Verdict of the three equivalent convex-geometry criteria, each with its
/// certifying object. `chain` lists x1..xn such that every prefix
/// {x1..xi} is convex; it is present exactly when the convexity is a
/// convex geometry.
struct GeometryCertificate {
  bool is_geometry = false;
  bool mkm = false;
  std::optional<Subset> mkm_violator;  // convex K with hull(ex(K)) ≠ K
  bool anti_exchange = false;
  std::optional<AntiExchangeViolation> anti_exchange_violator;
  bool extension = false;
  std::optional<Subset> stuck;  // convex K ≠ V with no one-point convex extension
  std::vector<std::size_t> chain;
};

/// Runs the Minkowski-Krein-Milman, anti-exchange and one-point-extension
/// tests over every closed set. Violators are the first in (size, bits)
/// order. Throws kInternalDisagreement if the three tests disagree and
/// kGroundTooLarge above 24.
GeometryCertificate geometry_certificate(const ClosureOperator& op);
GeometryCertificate is_convex_geometry(const TransitFunction& r);

/// True when `chain` is a permutation of V whose every prefix is closed.
bool verify_chain(const ClosureOperator& op, const std::vector<std::size_t>& chain);

/// Points of X not strictly between two other points of X.
Subset ex_b(const Betweenness& b, Subset x);

/// For every X ⊆ V and x1, x2, x3 ∈ X with x2 ∈ B(x1,x3), some pair of
/// extreme points of X has x2 between them. Witness roles x1, x2, x3 and
/// the subset X. Throws kGroundTooLarge above 16.
AxiomVerdict check_eb1(const Betweenness& b);

/// The Ch condition read on strict betweenness:
/// x ∈ B(u,v), y ∈ B(x,w) ⇒ y ∈ B(u,w) ∪ B(v,w) ∪ B(u,v).
AxiomVerdict check_eb2(const Betweenness& b);

/// R*(u,v) = hull(R(u,v)).
TransitFunction segment_transit(const TransitFunction& r);

/// Join-hull commutativity: hull(K ∪ {p}) = ⋃_{k ∈ K} hull({k,p}) for every
/// nonempty convex K and every point p. Witness: role "p" and the set K.
/// Throws kGroundTooLarge above 24.
AxiomVerdict is_jhc(const TransitFunction& r);

}  // namespace transit
