#ifndef DELTAGAMES_ERROR_HPP
#define DELTAGAMES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltagames {

// Stable machine-readable error codes. The string form (code_name) is part of
// the CLI output contract; do not rename.
enum class ErrorCode {
  kSyntax,           // malformed JSON or number text
  kShape,            // table or vector dimensions do not match the game
  kDeltaRange,       // rationality index outside [0,1]
  kDuplicateLabel,   // two strategies of one player share a label
  kUnknownKey,       // unexpected key in a game document
  kMissingKey,       // required key absent
  kBadNumber,        // value cannot be read as an exact rational
  kUnknownParameter, // table cell refers to an undefined parameter
  kSchemaVersion,    // unsupported schema_version
  kDimension,        // per-player vector has the wrong length
  kProbability,      // mixed strategy not a probability vector
  kIndex,            // player or strategy index out of range
  kDistribution,     // invalid DeltaDistribution parameters
  kStaleEquilibria,  // equilibrium set does not belong to the given deltas
  kDomain,           // operation not defined for this game shape
  kUsage,            // bad argument at the API or CLI level
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {})
      : std::runtime_error(location.empty() ? message
                                            : location + ": " + message),
        code_(code),
        location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  // JSON pointer, line:column, or "player N"; may be empty.
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace deltagames

#endif  // DELTAGAMES_ERROR_HPP
