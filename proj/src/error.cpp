#include "permring/error.hpp"

namespace permring {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::NotAnElement: return "NotAnElement";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::TupleLengthOutOfRange: return "TupleLengthOutOfRange";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::UnsupportedCategory: return "UnsupportedCategory";
    case ErrorCode::ZeroRing: return "ZeroRing";
    case ErrorCode::NonConjugateClosures: return "NonConjugateClosures";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace permring
