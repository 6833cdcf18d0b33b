#include "slopestab/seshadri.hpp"

#include <algorithm>
#include <utility>

#include "slopestab/error.hpp"
#include "slopestab/intersection.hpp"

namespace slopestab {

namespace {

std::vector<ProvenanceStep> merged(const std::vector<ProvenanceStep>& a, const std::vector<ProvenanceStep>& b) {
  std::vector<ProvenanceStep> out = a;
  for (const auto& step : b) {
    if (std::find(out.begin(), out.end(), step) == out.end()) out.push_back(step);
  }
  return out;
}

std::string bound_text(const std::optional<Surd>& upper) { return upper ? upper->to_string() : "+inf"; }

}  // namespace

SeshadriEstimate::SeshadriEstimate(Surd lower, std::optional<Surd> upper, std::vector<ProvenanceStep> provenance)
    : lower_(std::move(lower)), upper_(std::move(upper)), provenance_(std::move(provenance)) {
  if (lower_.sign() < 0) throw Error(ErrorKind::InconsistentBounds, "negative Seshadri lower bound " + lower_.to_string());
  if (upper_ && *upper_ < lower_) {
    throw Error(ErrorKind::InconsistentBounds,
                "lower bound " + lower_.to_string() + " exceeds upper bound " + upper_->to_string());
  }
}

SeshadriEstimate SeshadriEstimate::exact(Surd value, ProvenanceStep step) {
  Surd copy = value;
  return SeshadriEstimate(std::move(value), std::move(copy), {std::move(step)});
}

SeshadriEstimate SeshadriEstimate::bounded_above(Surd upper, ProvenanceStep step) {
  return SeshadriEstimate(Surd(0), std::move(upper), {std::move(step)});
}

SeshadriEstimate SeshadriEstimate::bounded_below(Surd lower, ProvenanceStep step) {
  return SeshadriEstimate(std::move(lower), std::nullopt, {std::move(step)});
}

SeshadriEstimate SeshadriEstimate::between(Surd lower, Surd upper, ProvenanceStep step) {
  return SeshadriEstimate(std::move(lower), std::move(upper), {std::move(step)});
}

std::optional<Surd> SeshadriEstimate::value() const {
  if (is_exact()) return lower_;
  return std::nullopt;
}

SeshadriEstimate SeshadriEstimate::with_step(ProvenanceStep step) const {
  SeshadriEstimate out = *this;
  out.provenance_.push_back(std::move(step));
  return out;
}

std::string SeshadriEstimate::to_string() const {
  if (is_exact()) return "exact " + lower_.to_string();
  return "[" + lower_.to_string() + ", " + bound_text(upper_) + (upper_ ? "]" : ")");
}

SeshadriEstimate combine(const SeshadriEstimate& a, const SeshadriEstimate& b) {
  std::optional<Surd> upper = a.upper();
  if (b.upper() && (!upper || *b.upper() < *upper)) upper = b.upper();
  return SeshadriEstimate(max(a.lower(), b.lower()), std::move(upper), merged(a.provenance(), b.provenance()));
}

SeshadriEstimate linear_subspace_exact(int n, int codim) {
  if (n < 1 || codim < 1 || codim > n) {
    throw Error(ErrorKind::InvalidScenario, "need a proper linear subspace: 1 <= codim <= n, got n=" +
                                                std::to_string(n) + " codim=" + std::to_string(codim));
  }
  const Rational top(n + 1);
  SeshadriEstimate upper = witness_curve_upper(top).with_step(
      {"linear-subspace", "a line l meeting Z, not inside it: -K.l = n+1 = " + top.to_string()});

  // -K - xH = O(n+1-x) is nef iff x <= n+1
  const SeshadriEstimate hyperplane = SeshadriEstimate::exact(
      Surd(top), {"hyperplane", "eps(H, P^" + std::to_string(n) + ", -K) = " + top.to_string()});
  SeshadriEstimate lower = hyperplane;
  for (int r = 2; r <= codim; ++r) lower = min_combination_lower(lower, hyperplane);

  return combine(upper, lower).with_step(
      {"linear-subspace", "eps(Z, P^" + std::to_string(n) + ", -K) = n+1 = " + top.to_string()});
}

SeshadriEstimate witness_curve_upper(const Rational& curve_degree) {
  if (curve_degree.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveDegree, "witness curve degree must be positive, got " + curve_degree.to_string());
  }
  return SeshadriEstimate::bounded_above(Surd(curve_degree),
                                         {"witness-curve", "eps(Z) <= L.C = " + curve_degree.to_string()});
}

SeshadriEstimate proper_transform_upper(const Rational& curve_degree, const Rational& multiplicity) {
  if (curve_degree.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveDegree, "witness curve degree must be positive, got " + curve_degree.to_string());
  }
  if (multiplicity.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveDegree, "E.C~ must be positive, got " + multiplicity.to_string());
  }
  const Rational bound = curve_degree / multiplicity;
  return SeshadriEstimate::bounded_above(
      Surd(bound), {"proper-transform", "(sigma^*L - xE).C~ = " + curve_degree.to_string() + " - " +
                                            multiplicity.to_string() + "x >= 0 gives eps(Z) <= " + bound.to_string()});
}

SeshadriEstimate min_combination_lower(const SeshadriEstimate& e1, const SeshadriEstimate& e2) {
  Surd lower = min(e1.lower(), e2.lower());
  auto steps = merged(e1.provenance(), e2.provenance());
  steps.push_back({"min-rule", "eps(Z_1 cap Z_2) >= min(eps(Z_1), eps(Z_2)) = " + lower.to_string()});
  return SeshadriEstimate(std::move(lower), std::nullopt, std::move(steps));
}

SeshadriEstimate product_fiber_estimate(const SeshadriEstimate& e) {
  return e.with_step({"product-fiber", "eps(X_1 x Z, L_1 [x] L_2) = eps(Z, L_2)"});
}

SeshadriEstimate blowup_exceptional_shift(const SeshadriEstimate& e) {
  const Surd one(1);
  Surd lower = e.lower() - one;
  if (lower.sign() < 0) {
    throw Error(ErrorKind::ShiftBelowZero,
                "eps(Z) - 1 needs eps(Z) >= 1, lower bound is " + e.lower().to_string());
  }
  std::optional<Surd> upper;
  if (e.upper()) upper = *e.upper() - one;
  auto steps = e.provenance();
  steps.push_back({"exceptional-shift", "eps(E, Bl_Z X, sigma^*A - E) = eps(Z, X, A) - 1"});
  return SeshadriEstimate(std::move(lower), std::move(upper), std::move(steps));
}

SeshadriEstimate nested_restriction(const SeshadriEstimate& z_in_x, const SeshadriEstimate& y_in_x) {
  if (!z_in_x.upper() || !(*z_in_x.upper() < y_in_x.lower())) {
    throw Error(ErrorKind::HypothesisNotCertified,
                "eps(Z,X) < eps(Y,X) does not follow from " + z_in_x.to_string() + " and " + y_in_x.to_string());
  }
  return z_in_x.with_step({"nested-restriction", "eps(Z,X) < eps(Y,X) gives eps(Z, Y, L|_Y) = eps(Z, X, L)"});
}

SeshadriEstimate moving_curve_upper(const CurveScenario& s) {
  if (!s.anticanonical || s.genus != 0 || s.degree < 3) {
    throw Error(ErrorKind::HypothesisFails,
                "moving-curve bound needs a smooth rational curve with -K_X.Z >= 3, got " + describe(s));
  }
  return SeshadriEstimate::bounded_above(
      Surd(Rational(s.degree)), {"moving-curve", "Z deforms through a fixed point: eps(Z) <= -K_X.Z = " +
                                                     std::to_string(s.degree)});
}

SeshadriEstimate point_seshadri_cap(int n, bool is_projective_space) {
  if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "point cap needs n >= 3, got " + std::to_string(n));
  if (is_projective_space) {
    return SeshadriEstimate::exact(Surd(Rational(n + 1)),
                                   {"point-cap", "eps(p, P^n, -K) = n+1 = " + std::to_string(n + 1)});
  }
  return SeshadriEstimate::bounded_above(
      Surd(Rational(n)), {"point-cap", "X not P^n: eps(p, X, -K_X) <= n = " + std::to_string(n)});
}

SeshadriEstimate quadric_surface_fiber(const Rational& alpha) {
  if (alpha.sign() < 0) throw Error(ErrorKind::NonPositiveDegree, "C + alpha Z needs alpha >= 0");
  return SeshadriEstimate::exact(
      Surd(alpha), {"quadric-surface-fiber", "C + (" + alpha.to_string() + " - x) Z nef iff x <= " + alpha.to_string()});
}

SeshadriEstimate contradiction_certificate(const SeshadriEstimate& z_in_x_witness, const SeshadriEstimate& y_in_x,
                                           const SeshadriEstimate& z_in_y) {
  if (!z_in_x_witness.upper()) {
    throw Error(ErrorKind::HypothesisNotCertified, "contradiction needs an upper bound on eps(Z, X)");
  }
  const Surd& bound = *z_in_x_witness.upper();
  // eps(Z,X) < bound <= eps(Y,X) would make the nested rule applicable
  if (bound > y_in_x.lower()) {
    throw Error(ErrorKind::HypothesisNotCertified,
                "cannot certify eps(Z,X) < eps(Y,X): bound " + bound.to_string() + " exceeds " + y_in_x.to_string());
  }
  if (z_in_y.lower() < bound) {
    throw Error(ErrorKind::HypothesisNotCertified,
                "eps(Z,Y) = " + z_in_y.to_string() + " does not contradict eps(Z,X) < " + bound.to_string());
  }
  auto steps = merged(merged(z_in_x_witness.provenance(), y_in_x.provenance()), z_in_y.provenance());
  steps.push_back({"contradiction",
                   "eps(Z,X) < " + bound.to_string() + " would force eps(Z,X) = eps(Z,Y) >= " + bound.to_string() +
                       "; hence eps(Z,X) = " + bound.to_string()});
  Surd value = bound;
  return SeshadriEstimate(value, value, std::move(steps));
}

SeshadriEstimate blowup_line_fiber_certificate() {
  const SeshadriEstimate line = linear_subspace_exact(3, 2);
  const SeshadriEstimate exceptional = blowup_exceptional_shift(line);

  // E = P^1 x P^1 and -K_X|_E = C + alpha Z with (C + alpha Z)^2 = 2 alpha
  const Rational line_degree = 4;
  const Rational square = anticanonical_square_exceptional(line_degree, 0);
  const Rational alpha = square / Rational(2);
  const ProvenanceStep restriction{"exceptional-square", "(-K_X|_E)^2 = -K.l + 2 - 2g = " + square.to_string() +
                                                             " = 2 alpha, so -K_X|_E = C + " + alpha.to_string() + "Z"};

  const SeshadriEstimate witness =
      witness_curve_upper(alpha).with_step({"section-witness", "-K_X.C = (C + alpha Z).C = " + alpha.to_string()});
  SeshadriEstimate fiber = quadric_surface_fiber(alpha);
  fiber = SeshadriEstimate(fiber.lower(), fiber.upper(), merged({restriction}, fiber.provenance()));
  return contradiction_certificate(witness, exceptional, fiber);
}

}  // namespace slopestab
