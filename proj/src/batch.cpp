#include "slopestab/batch.hpp"

#include <exception>

#include "slopestab/slope.hpp"

namespace slopestab {

namespace {

[[noreturn]] void violated(const std::string& message) { throw Error(ErrorKind::InvariantViolation, message); }

void check_witness(const CurveScenario& s, const SeshadriEstimate& e, const Verdict& v, LambdaRange range) {
  if (v.status != Status::StrictlyDestabilized && v.status != Status::SemistableNotStable) return;
  if (!v.witness) violated("non-stable verdict without a witness lambda");
  const Surd& w = *v.witness;
  const Polynomial f = destabilizing_quadratic(s);
  const int sign = f(w).sign();
  if (v.status == Status::StrictlyDestabilized && sign >= 0) {
    violated("strict witness " + w.to_string() + " has f >= 0");
  }
  if (v.status == Status::SemistableNotStable && sign != 0) {
    violated("semistable witness " + w.to_string() + " has f != 0");
  }
  if (w.sign() <= 0) violated("witness " + w.to_string() + " is not positive");
  if (e.upper()) {
    const bool inside = range == LambdaRange::Closed ? !(*e.upper() < w) : w < *e.upper();
    if (!inside) violated("witness " + w.to_string() + " lies outside the lambda range " + e.to_string());
  }
}

// For exact eps the case analysis and the generic sign scan must agree.
void check_routes_agree(const CurveScenario& s, const SeshadriEstimate& e, LambdaRange range) {
  if (!e.is_exact() || !s.anticanonical || s.genus != 0 || s.n < 3) return;
  Verdict regime;
  try {
    regime = degree_regime_verdict(s, e, range);
  } catch (const Error&) {
    return;  // the cascade already reported or short-circuited the scenario
  }
  const Verdict generic = quadratic_sign_verdict(s, e, range);
  if (regime.status != generic.status) {
    violated("case analysis says " + std::string(to_string(regime.status)) + " but the sign of f says " +
             std::string(to_string(generic.status)));
  }
}

}  // namespace

ClassifyOutcome classify_one(const ParsedScenario& item, LambdaRange range) {
  ClassifyOutcome out;
  if (const auto* err = std::get_if<ScenarioError>(&item)) {
    out.name = err->name;
    out.error_kind = err->kind;
    out.error_message = err->message;
    return out;
  }
  const auto& entry = std::get<ScenarioEntry>(item);
  out.name = entry.name;
  out.curve = describe(entry.curve);
  try {
    const SeshadriEstimate e = evaluate_seshadri(entry.seshadri, entry.curve);
    out.estimate = e;
    const Verdict v = entry.curve.anticanonical ? classify_curve(entry.curve, e, entry.flags, range)
                                                : quadratic_sign_verdict(entry.curve, e, range);
    check_witness(entry.curve, e, v, range);
    check_routes_agree(entry.curve, e, range);
    out.verdict = v;
  } catch (const Error& err) {
    out.error_kind = err.kind();
    out.error_message = err.what();
  } catch (const std::exception& err) {
    out.error_kind = ErrorKind::InvariantViolation;
    out.error_message = err.what();
  }
  return out;
}

std::vector<ClassifyOutcome> classify_batch_serial(std::span<const ParsedScenario> items, LambdaRange range) {
  std::vector<ClassifyOutcome> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(classify_one(item, range));
  return out;
}

std::vector<ClassifyOutcome> classify_batch(std::span<const ParsedScenario> items, LambdaRange range) {
  std::vector<ClassifyOutcome> out(items.size());
  const auto count = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = classify_one(items[static_cast<std::size_t>(i)], range);
  }
  return out;
}

namespace {

SweepRow sweep_row(const CurveScenario& s, const Polynomial& f, const Rational& lambda) {
  SweepRow row;
  row.lambda = lambda;
  row.mu_lambda = quotient_slope_closed(s, lambda).value;
  row.f = f(lambda);
  row.sign = row.f.sign();
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_serial(const CurveScenario& s, std::span<const Rational> grid) {
  const Polynomial f = destabilizing_quadratic(s);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& lambda : grid) rows.push_back(sweep_row(s, f, lambda));
  return rows;
}

std::vector<SweepRow> sweep(const CurveScenario& s, std::span<const Rational> grid) {
  const Polynomial f = destabilizing_quadratic(s);
  std::vector<SweepRow> rows(grid.size());
  std::exception_ptr first_error;
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = sweep_row(s, f, grid[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(slopestab_sweep_error)
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

std::size_t oracle_mismatches_serial(std::span<const OracleCase> cases) {
  std::size_t bad = 0;
  for (const auto& c : cases) {
    try {
      if (quotient_slope_closed(c.scenario, c.lambda).value != quotient_slope_integral(c.scenario, c.lambda)) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  return bad;
}

std::size_t oracle_mismatches(std::span<const OracleCase> cases) {
  std::size_t bad = 0;
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& c = cases[static_cast<std::size_t>(i)];
    try {
      if (quotient_slope_closed(c.scenario, c.lambda).value != quotient_slope_integral(c.scenario, c.lambda)) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  return bad;
}

}  // namespace slopestab
