#include "transit/subset.hpp"

#include <algorithm>
#include <unordered_set>

#include "transit/error.hpp"

namespace transit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kGroundTooLarge: return "GroundTooLarge";
    case ErrorCode::kNotConvex: return "NotConvex";
    case ErrorCode::kInternalDisagreement: return "InternalDisagreement";
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kUncoveredPair: return "UncoveredPair";
    case ErrorCode::kMissingSingleton: return "MissingSingleton";
    case ErrorCode::kHypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kUnknownTheorem: return "UnknownTheorem";
    case ErrorCode::kUnknownPredicate: return "UnknownPredicate";
  }
  return "Error";
}

GroundSet::GroundSet(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(ErrorCode::kMalformedInput, "ground set must be nonempty");
  if (n_ > kMaxGround) {
    throw Error(ErrorCode::kGroundTooLarge,
                "ground set of size " + std::to_string(n_) + " exceeds 64");
  }
  if (!labels_.empty()) {
    if (labels_.size() != n_) {
      throw Error(ErrorCode::kMalformedInput,
                  "expected " + std::to_string(n_) + " labels, got " +
                      std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n_) throw Error(ErrorCode::kMalformedInput, "labels are not distinct");
  }
}

std::string GroundSet::name(std::size_t i) const {
  return labels_.empty() ? std::to_string(i) : labels_.at(i);
}

std::optional<std::size_t> GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void GroundSet::check_index(std::size_t i) const {
  if (i >= n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(i) + " not below " + std::to_string(n_));
  }
}

std::string format_subset(const GroundSet& ground, Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : s) {
    if (!first) out += ',';
    out += ground.name(e);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace transit
