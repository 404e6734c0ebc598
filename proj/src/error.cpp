#include "eddefect/error.hpp"

namespace eddefect {

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::InvalidArgument: return "InvalidArgument";
    case ErrorCategory::UnknownVariable: return "UnknownVariable";
    case ErrorCategory::SyntaxError: return "SyntaxError";
    case ErrorCategory::RingMismatch: return "RingMismatch";
    case ErrorCategory::NotExact: return "NotExact";
    case ErrorCategory::IoError: return "IoError";
    case ErrorCategory::CapExceeded: return "CapExceeded";
    case ErrorCategory::NotSingular: return "NotSingular";
    case ErrorCategory::NonIsolatedOrCapExceeded: return "NonIsolatedOrCapExceeded";
    case ErrorCategory::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCategory::UnluckyPrimeSuspected: return "UnluckyPrimeSuspected";
    case ErrorCategory::WeightZero: return "WeightZero";
    case ErrorCategory::DegenerateCombination: return "DegenerateCombination";
    case ErrorCategory::BezoutOverflow: return "BezoutOverflow";
    case ErrorCategory::UnstableCount: return "UnstableCount";
    case ErrorCategory::PositiveDimensional: return "PositiveDimensional";
    case ErrorCategory::PosetInconsistent: return "PosetInconsistent";
    case ErrorCategory::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCategory::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

}  // namespace eddefect
