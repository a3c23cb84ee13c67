#include "symkit/error.hpp"

namespace symkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonZeroConstantTerm: return "NonZeroConstantTerm";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LengthError: return "LengthError";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::PropertySViolated: return "PropertySViolated";
    case ErrorCode::NotHomogeneousInput: return "NotHomogeneousInput";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NoNonvanishingPoint: return "NoNonvanishingPoint";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::GridExhausted: return "GridExhausted";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace symkit
