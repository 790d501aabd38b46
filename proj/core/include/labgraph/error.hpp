#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace labgraph {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidGraph,
  kNotALabeledPath,
  kNotAnAutomorphism,
  kNotAMember,
  kAxiomFailure,
  kOutOfWindow,
  kWellDefinedness,
  kSearchSpaceExceeded,
  kPrecondition,
  kLiftFailure,
  kNonFreeWitness,
  kNoFundamentalDomain,
  kLabelConsistencyViolation,
  kParseError,
  kSchemaError,
  kVerificationFailure,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The message
// carries the witness (offending ids, field path, ...) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace labgraph
