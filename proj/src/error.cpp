#include "latticelab/error.hpp"

namespace latticelab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotPureDifference: return "NotPureDifference";
    case ErrorKind::NotSaturatedInput: return "NotSaturatedInput";
    case ErrorKind::IntersectionMismatch: return "IntersectionMismatch";
    case ErrorKind::RingTooLarge: return "RingTooLarge";
  }
  return "Unknown";
}

}  // namespace latticelab
