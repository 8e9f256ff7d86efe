#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

enum class ErrorKind {
  NonIntegralCoefficient,
  ZeroPolynomial,
  NotASquare,
  NotSymmetric,
  NotExact,
  DegenerateA,
  DenominatorNotCleared,
  OracleMismatch,
  BudgetExceeded,
  InvalidInput,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::DegenerateA: return "DegenerateA";
    case ErrorKind::DenominatorNotCleared: return "DenominatorNotCleared";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of internal self-checks (as opposed to bad input).
  bool is_consistency_failure() const noexcept {
    switch (kind_) {
      case ErrorKind::NonIntegralCoefficient:
      case ErrorKind::NotASquare:
      case ErrorKind::NotExact:
      case ErrorKind::DenominatorNotCleared:
      case ErrorKind::OracleMismatch:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

/// Thrown by the fixed-width fast path; callers fall back to BigInt.
struct Overflow {};

}  // namespace brauer
