#ifndef PERMRING_ERROR_HPP
#define PERMRING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permring {

enum class ErrorCode {
  InvalidPermutation,
  DegreeMismatch,
  OrderBoundExceeded,
  NotAnElement,
  ParentMismatch,
  NotPrime,
  GroupMismatch,
  TupleLengthOutOfRange,
  SizeBudgetExceeded,
  PrimeDoesNotDivideOrder,
  MissingPrime,
  NotTransitive,
  UnsupportedCategory,
  ZeroRing,
  NonConjugateClosures,
  InternalInconsistency,
  BudgetExceeded,
  Overflow,
  ParseError,
  UnsupportedFamily,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the group/subgroup spec parser; position is a 0-based offset
// into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace permring

#endif  // PERMRING_ERROR_HPP
