#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transit {

enum class ErrorCode {
  kAxiomViolation,
  kIndexOutOfRange,
  kDuplicatePair,
  kGroundTooLarge,
  kNotConvex,
  kInternalDisagreement,
  kMalformedGraph6,
  kMalformedInput,
  kDisconnected,
  kUncoveredPair,
  kMissingSingleton,
  kHypothesesNotMet,
  kNotConnected,
  kUnknownTheorem,
  kUnknownPredicate,
};

std::string_view to_string(ErrorCode code);

// Every domain failure raised by the library. The code identifies the failure
// class; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace transit
