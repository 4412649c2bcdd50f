#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "transit/transit_function.hpp"
#include "transit/verdict.hpp"

namespace transit {

/// Betweenness axioms on transit functions.
///
///   b1       x ∈ R(u,v), x ≠ v  ⇒  v ∉ R(u,x)
///   b3       x ∈ R(u,v), y ∈ R(u,x)  ⇒  x ∈ R(y,v)
///   m        x,y ∈ R(u,v)  ⇒  R(x,y) ⊆ R(u,v)
///   j0       u,v,x,y distinct, x ∈ R(u,y), y ∈ R(x,v)  ⇒  x ∈ R(u,v)
///   ch       x ∈ R(u,v), y ∈ R(x,w)  ⇒  y ∈ R(u,w) ∪ R(v,w) ∪ R(u,v)
///   p        x ∈ R(u,v), y ∈ R(x,w)  ⇒  ∃ z ∈ R(u,w) with y ∈ R(z,v)
///   a_prime  ∃ u,v with R(u,v) = V
///   k        R(u,v) ∩ R(x,y) ≠ ∅  ⇒  the intersection is some R(p,q)
///   cg       every R(x,y) ≠ V has z ∈ R(x,y), w ∉ R(x,y) with
///            R(x,y) ∪ {w} = R(w,z)
///
/// Pairs with R(x,y) = V are exempt from cg; no w outside V exists for them.
enum class AxiomId { b1, b3, m, j0, ch, p, a_prime, k, cg };

inline constexpr std::array<AxiomId, 9> kAllAxioms = {
    AxiomId::b1, AxiomId::b3,      AxiomId::m, AxiomId::j0, AxiomId::ch,
    AxiomId::p,  AxiomId::a_prime, AxiomId::k, AxiomId::cg};

/// Conventional label: "b1", "b3", "m", "J0", "Ch", "P", "a'", "k", "cg".
std::string_view label(AxiomId a);
/// Snake-case identifier used on the command line: "j0", "a_prime", ...
std::string_view identifier(AxiomId a);
/// Accepts either the label or the identifier, case-insensitively.
std::optional<AxiomId> parse_axiom(std::string_view text);

/// Exhaustive decision procedure. A failing verdict names the
/// lexicographically first violating tuple, with variables ordered as in the
/// axiom's statement (roles "u","v","w","x","y" plus "z" for the offending
/// element where one exists).
AxiomVerdict check_axiom(const TransitFunction& r, AxiomId a);

/// Re-evaluates a failing verdict's witness directly against the axiom's
/// defining condition. True iff the witness proves the failure.
bool witness_confirms(const TransitFunction& r, AxiomId a, const AxiomVerdict& verdict);

/// Verdicts for every axiom.
class AxiomProfile {
 public:
  const AxiomVerdict& operator[](AxiomId a) const { return verdicts_[static_cast<std::size_t>(a)]; }
  AxiomVerdict& operator[](AxiomId a) { return verdicts_[static_cast<std::size_t>(a)]; }
  bool holds(AxiomId a) const { return (*this)[a].holds; }

 private:
  std::array<AxiomVerdict, kAllAxioms.size()> verdicts_;
};

AxiomProfile axiom_profile(const TransitFunction& r);

}  // namespace transit
