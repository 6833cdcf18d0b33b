#include "slopestab/error.hpp"

namespace slopestab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IncomparableRadicands: return "IncomparableRadicands";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::AllCoefficientsZero: return "AllCoefficientsZero";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
    case ErrorKind::ScenarioInconsistent: return "ScenarioInconsistent";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorKind::ShiftBelowZero: return "ShiftBelowZero";
    case ErrorKind::HypothesisNotCertified: return "HypothesisNotCertified";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::InconsistentBounds: return "InconsistentBounds";
    case ErrorKind::NotAnticanonical: return "NotAnticanonical";
    case ErrorKind::NonRationalCurve: return "NonRationalCurve";
    case ErrorKind::TooFewSummands: return "TooFewSummands";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::GridOutOfRange: return "GridOutOfRange";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace slopestab
