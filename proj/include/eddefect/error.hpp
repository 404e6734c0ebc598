#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eddefect {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCategory {
  InvalidArgument,
  UnknownVariable,
  SyntaxError,
  RingMismatch,
  NotExact,
  IoError,
  CapExceeded,
  NotSingular,
  NonIsolatedOrCapExceeded,
  NotZeroDimensional,
  UnluckyPrimeSuspected,
  WeightZero,
  DegenerateCombination,
  BezoutOverflow,
  UnstableCount,
  PositiveDimensional,
  PosetInconsistent,
  NonUnitConstantTerm,
  OracleDisagreement,
};

std::string_view to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// Parse failure with the 0-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCategory category, const std::string& message, std::size_t position)
      : Error(category, message + " at position " + std::to_string(position)),
        detail_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// Message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

}  // namespace eddefect
