#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resnil {

enum class ErrorKind {
  ZeroPolynomial,
  NotMonic,
  NotSquare,
  SizeCapExceeded,
  BadCompoundOrder,
  NotUnimodular,
  DimensionMismatch,
  SyntaxError,
  UnknownGenerator,
  ExponentZero,
  RankMismatch,
  AlphabetMismatch,
  NotPrime,
  BadModulus,
  Not2x2,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers (the CLI
/// in particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the word parser; `position()` is the 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace resnil
