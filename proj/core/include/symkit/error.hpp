#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symkit {

enum class ErrorCode {
  DivisionByZero,
  DomainMismatch,
  NotSquare,
  Singular,
  ArityMismatch,
  IndexOutOfRange,
  NotDivisible,
  NonUnitConstantTerm,
  NonZeroConstantTerm,
  BudgetExceeded,
  LengthMismatch,
  LengthError,
  WeightMismatch,
  NotContained,
  NotSymmetric,
  PropertySViolated,
  NotHomogeneousInput,
  HypothesisFailed,
  NoNonvanishingPoint,
  VerificationFailed,
  GridExhausted,
  ZeroPolynomial,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace symkit
