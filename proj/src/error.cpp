#include "recdiff/error.hpp"

namespace recdiff {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedConfig: return "MalformedConfig";
    case ErrorKind::InvalidRecurrence: return "InvalidRecurrence";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NoDominantRoot: return "NoDominantRoot";
    case ErrorKind::RootNotLargerThanOne: return "RootNotLargerThanOne";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CutoffUnsafe: return "CutoffUnsafe";
    case ErrorKind::InvalidBelowThreshold: return "InvalidBelowThreshold";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
  }
  return "Unknown";
}

}  // namespace recdiff
