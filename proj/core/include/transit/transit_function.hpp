#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "transit/subset.hpp"

namespace transit {

/// One explicitly specified transit set R(u,v).
struct TransitEntry {
  std::size_t u = 0;
  std::size_t v = 0;
  Subset set;
  bool operator==(const TransitEntry&) const = default;
};

/// A transit function R on a finite ground set: u ∈ R(u,v), R(u,v) = R(v,u)
/// and R(u,u) = {u}. Immutable once built; every constructor validates.
class TransitFunction {
 public:
  /// The minimal transit function, R(u,v) = {u,v}.
  explicit TransitFunction(GroundSet ground);

  /// Builds R from `f(u, v)` evaluated once for every u < v. Throws
  /// Error(kAxiomViolation) when a returned set misses u or v and
  /// Error(kIndexOutOfRange) when it leaves the ground set.
  static TransitFunction from_function(GroundSet ground,
                                       const std::function<Subset(std::size_t, std::size_t)>& f);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return n_; }
  Subset full() const { return Subset::full(n_); }

  /// Unchecked lookup for hot loops.
  Subset operator()(std::size_t u, std::size_t v) const { return table_[u * n_ + v]; }

  /// Stored R(u,v); throws Error(kIndexOutOfRange) for bad indices.
  Subset transit_set(std::size_t u, std::size_t v) const;

  /// All pairs u < v whose transit set differs from {u,v}, in (u,v) order.
  std::vector<TransitEntry> nondefault_entries() const;

  /// Bitwise equality of the tables (labels are ignored).
  bool same_table(const TransitFunction& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }
  bool operator==(const TransitFunction& other) const {
    return ground_ == other.ground_ && table_ == other.table_;
  }

 private:
  GroundSet ground_;
  std::size_t n_;
  std::vector<Subset> table_;  // n*n, symmetric
};

/// Validating constructor from sparse entries. Unspecified pairs default to
/// {u,v}, the diagonal to {u}. Errors: kIndexOutOfRange, kDuplicatePair
/// (an unordered pair listed twice), kAxiomViolation for (t1) or (t3).
TransitFunction make_transit_function(GroundSet ground, const std::vector<TransitEntry>& entries);

/// Shorthand for small labelled tables in tests and fixtures: each string
/// pair names u, v by label and the set by a string of single-letter labels.
TransitFunction transit_from_labels(const std::vector<std::string>& labels,
                                    const std::vector<std::pair<std::string, std::string>>& entries);

/// Strict betweenness B(u,v) with u, v ∉ B(u,v), stored symmetrically.
class Betweenness {
 public:
  /// Builds B from `f(u, v)` for u < v; diagonal entries are empty. Throws
  /// Error(kAxiomViolation) when f(u, v) contains u or v.
  static Betweenness from_function(GroundSet ground,
                                   const std::function<Subset(std::size_t, std::size_t)>& f);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return n_; }
  Subset operator()(std::size_t u, std::size_t v) const { return table_[u * n_ + v]; }

  bool operator==(const Betweenness&) const = default;

 private:
  explicit Betweenness(GroundSet ground);
  GroundSet ground_;
  std::size_t n_;
  std::vector<Subset> table_;
};

/// B(u,v) = R(u,v) \ {u,v}.
Betweenness to_betweenness(const TransitFunction& r);

/// Deterministic generator: every w ∉ {u,v} joins R(u,v), u < v, with
/// probability `density`, drawn from a seeded mt19937_64.
TransitFunction random_transit_function(std::size_t n, std::uint64_t seed, double density);

/// Uniform draw in [0, 1) from the top 53 bits of a 64-bit word; bit-exact
/// across standard libraries, unlike std::uniform_real_distribution.
inline double unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace transit
