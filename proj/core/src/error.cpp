#include "mconv/error.hpp"

namespace mconv {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ProductRelation: return "ProductRelation";
    case ErrorKind::InvalidPoints: return "InvalidPoints";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DoesNotSplit: return "DoesNotSplit";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::DimensionInconsistency: return "DimensionInconsistency";
    case ErrorKind::NonGenericUnsupported: return "NonGenericUnsupported";
    case ErrorKind::LambdaIsOne: return "LambdaIsOne";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::NoRootInQuadratic: return "NoRootInQuadratic";
    case ErrorKind::NoInvariantForm: return "NoInvariantForm";
    case ErrorKind::SmallPrime: return "SmallPrime";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace mconv
