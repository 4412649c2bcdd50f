#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transit/subset.hpp"

namespace transit {

/// One instantiated variable of a witness, e.g. {"x", 2}.
struct WitnessEntry {
  std::string role;
  std::size_t index = 0;
  bool operator==(const WitnessEntry&) const = default;
};

/// Outcome of a decision procedure. A failing verdict always carries a
/// witness that can be re-checked against the defining condition; some
/// verdicts (holes, non-complete blocks, eB1 subsets) also carry a set.
struct AxiomVerdict {
  std::string axiom;
  bool holds = true;
  std::vector<WitnessEntry> witness;
  std::optional<Subset> witness_set;
  /// Kind of witness when several exist, e.g. the forbidden pattern's name.
  std::string detail;

  /// Index bound to `role`, if the witness names it.
  std::optional<std::size_t> at(std::string_view role) const {
    for (const auto& w : witness) {
      if (w.role == role) return w.index;
    }
    return std::nullopt;
  }

  static AxiomVerdict pass(std::string axiom) { return {std::move(axiom), true, {}, {}, {}}; }
  static AxiomVerdict fail(std::string axiom, std::vector<WitnessEntry> witness,
                           std::optional<Subset> set = std::nullopt) {
    return {std::move(axiom), false, std::move(witness), set, {}};
  }
};

}  // namespace transit
