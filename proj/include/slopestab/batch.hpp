#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slopestab/classify.hpp"
#include "slopestab/scenario_file.hpp"

namespace slopestab {

// Batch kernels. Each has a plain serial loop, kept as the reference, and an
// OpenMP version that must produce identical output in input order.

struct ClassifyOutcome {
  std::string name;
  std::string curve;  // describe() of the scenario, empty when it failed to parse
  std::optional<SeshadriEstimate> estimate;
  std::optional<Verdict> verdict;
  std::optional<ErrorKind> error_kind;
  std::string error_message;

  bool ok() const { return !error_kind.has_value(); }
  bool operator==(const ClassifyOutcome&) const = default;
};

/// Classifies one scenario. Anticanonical scenarios go through classify_curve;
/// any other polarization is decided by the sign of the destabilizing quadratic.
/// Verdicts are cross-checked against f before being returned; a failed check is
/// reported as InvariantViolation.
ClassifyOutcome classify_one(const ParsedScenario& item, LambdaRange range);

std::vector<ClassifyOutcome> classify_batch_serial(std::span<const ParsedScenario> items, LambdaRange range);
std::vector<ClassifyOutcome> classify_batch(std::span<const ParsedScenario> items, LambdaRange range);

struct SweepRow {
  Rational lambda;
  Rational mu_lambda;
  Rational f;
  int sign = 0;  // sign of f, equal to the sign of mu_lambda - mu

  bool operator==(const SweepRow&) const = default;
};

std::vector<SweepRow> sweep_serial(const CurveScenario& s, std::span<const Rational> grid);
std::vector<SweepRow> sweep(const CurveScenario& s, std::span<const Rational> grid);

struct OracleCase {
  CurveScenario scenario;
  Rational lambda;
};

/// Number of cases where the closed quotient slope differs from the integral one.
std::size_t oracle_mismatches_serial(std::span<const OracleCase> cases);
std::size_t oracle_mismatches(std::span<const OracleCase> cases);

}  // namespace slopestab
