#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slopestab {

enum class ErrorKind {
  // exactnum
  DivisionByZero,
  ParseError,
  IncomparableRadicands,
  NegativeRadicand,
  AllCoefficientsZero,
  // scenario / intersection
  InvalidScenario,
  ScenarioInconsistent,
  DimensionTooSmall,
  ZeroDenominator,
  // seshadri
  NonPositiveDegree,
  ShiftBelowZero,
  HypothesisNotCertified,
  HypothesisFails,
  InconsistentBounds,
  // classify
  NotAnticanonical,
  NonRationalCurve,
  TooFewSummands,
  WrongRank,
  // cli
  GridOutOfRange,
  UnknownScenario,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and machine-checkable;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slopestab
