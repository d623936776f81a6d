#include "resnil/error.hpp"

namespace resnil {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::BadCompoundOrder: return "BadCompoundOrder";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::ExponentZero: return "ExponentZero";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::Not2x2: return "Not2x2";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& what)
    : Error(ErrorKind::SyntaxError, "at position " + std::to_string(position) + ": " + what),
      position_(position) {}

}  // namespace resnil
