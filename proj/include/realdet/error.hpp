#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realdet {

enum class ErrorCode {
  ConstraintViolation,
  InconsistentFlags,
  GenusTooSmall,
  InvalidArgument,
  CurveMismatch,
  IllegalRelabeling,
  EmptyRealPart,
  NotSeparating,
  PreconditionViolated,
  RankTooSmall,
  CaseMismatch,
  OutOfRange,
  DegreeOutOfRange,
  NoFixedPoint,
  ValidationError,
  BoundTooLarge,
  UnknownLemma,
  UnknownGenerator,
  OracleMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported as an Error. `field` names the
/// offending input (a JSON-style path when it came through the CLI), and is
/// empty when no single input is to blame.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace realdet
