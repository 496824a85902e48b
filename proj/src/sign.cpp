#include "realdet/sign.hpp"

#include <ostream>

#include "realdet/error.hpp"

namespace realdet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::InconsistentFlags: return "InconsistentFlags";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::IllegalRelabeling: return "IllegalRelabeling";
    case ErrorCode::EmptyRealPart: return "EmptyRealPart";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

Sign Sign::from_int(long long value) {
  if (value == 1) return plus();
  if (value == -1) return minus();
  throw Error(ErrorCode::InvalidArgument,
              "sign must be +1 or -1, got " + std::to_string(value));
}

std::ostream& operator<<(std::ostream& os, Sign s) { return os << (s.is_plus() ? "+1" : "-1"); }

}  // namespace realdet
