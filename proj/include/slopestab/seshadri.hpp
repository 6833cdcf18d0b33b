#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopestab/scenario.hpp"
#include "slopestab/surd.hpp"

namespace slopestab {

/// One proven rule applied while building an estimate.
struct ProvenanceStep {
  std::string rule;       // short stable identifier, e.g. "witness-curve"
  std::string statement;  // the inequality or identity it contributed

  bool operator==(const ProvenanceStep&) const = default;
};

/// Certified enclosure lower <= eps <= upper of a Seshadri constant.
/// A missing upper bound means +infinity.
class SeshadriEstimate {
 public:
  SeshadriEstimate() = default;
  SeshadriEstimate(Surd lower, std::optional<Surd> upper, std::vector<ProvenanceStep> provenance);

  static SeshadriEstimate exact(Surd value, ProvenanceStep step);
  static SeshadriEstimate bounded_above(Surd upper, ProvenanceStep step);
  static SeshadriEstimate bounded_below(Surd lower, ProvenanceStep step);
  static SeshadriEstimate between(Surd lower, Surd upper, ProvenanceStep step);

  const Surd& lower() const { return lower_; }
  const std::optional<Surd>& upper() const { return upper_; }
  const std::vector<ProvenanceStep>& provenance() const { return provenance_; }

  bool is_exact() const { return upper_ && *upper_ == lower_; }
  /// The value when lower == upper.
  std::optional<Surd> value() const;

  SeshadriEstimate with_step(ProvenanceStep step) const;

  /// "exact 4", "[2, 3]", "[0, +inf)".
  std::string to_string() const;

  bool operator==(const SeshadriEstimate&) const = default;

 private:
  Surd lower_;
  std::optional<Surd> upper_;
  std::vector<ProvenanceStep> provenance_;
};

/// Intersection of two enclosures of the same constant.
SeshadriEstimate combine(const SeshadriEstimate& a, const SeshadriEstimate& b);

/// eps(Z, P^n, -K) = n + 1 for a proper linear subspace of codimension codim:
/// a line through Z gives the upper bound, hyperplanes and the min rule the lower.
SeshadriEstimate linear_subspace_exact(int n, int codim = 1);

/// A curve C not in Z meeting Z gives eps(Z) <= L.C.
SeshadriEstimate witness_curve_upper(const Rational& curve_degree);

/// If the proper transform of C meets E with multiplicity e, (sigma^*L - xE).C~ = L.C - x e
/// must stay >= 0, so eps(Z) <= L.C / e.
SeshadriEstimate proper_transform_upper(const Rational& curve_degree, const Rational& multiplicity);

/// For Z cut out by I_1 + I_2: eps(Z) >= min(eps(Z_1), eps(Z_2)). Only a lower bound results.
SeshadriEstimate min_combination_lower(const SeshadriEstimate& e1, const SeshadriEstimate& e2);

/// eps(X_1 x Z, L_1 [x] L_2) = eps(Z, L_2).
SeshadriEstimate product_fiber_estimate(const SeshadriEstimate& e);

/// eps(E, Bl_Z X, sigma^*A - E) = eps(Z, X, A) - 1.
SeshadriEstimate blowup_exceptional_shift(const SeshadriEstimate& e);

/// Z in Y in X: eps(Z,X) < eps(Y,X) implies eps(Z,Y,L|_Y) = eps(Z,X). The strict
/// inequality must follow from the bounds (upper of Z below lower of Y).
SeshadriEstimate nested_restriction(const SeshadriEstimate& z_in_x, const SeshadriEstimate& y_in_x);

/// Smooth rational Z with -K_X.Z >= 3 moves with a point fixed, so eps(Z) <= -K_X.Z.
SeshadriEstimate moving_curve_upper(const CurveScenario& s);

/// eps(p, X, -K_X) <= n for X not P^n (n >= 3); eps(p, P^n, -K) = n + 1.
SeshadriEstimate point_seshadri_cap(int n, bool is_projective_space);

/// Nef threshold of C + (alpha - x) Z on P^1 x P^1 (C a section with C^2 = 0,
/// Z a fibre): eps(Z, E, C + alpha Z) = alpha.
SeshadriEstimate quadric_surface_fiber(const Rational& alpha);

/// Proof by contradiction for Z in Y in X. Given a witness upper bound U on
/// eps(Z, X), assume eps(Z, X) < U. If U <= eps(Y, X) then the nested rule applies
/// and eps(Z, X) = eps(Z, Y); if eps(Z, Y) >= U that contradicts the assumption,
/// so eps(Z, X) = U. Throws HypothesisNotCertified when either check fails.
SeshadriEstimate contradiction_certificate(const SeshadriEstimate& z_in_x_witness,
                                           const SeshadriEstimate& y_in_x,
                                           const SeshadriEstimate& z_in_y);

/// Fibre Z of E -> l for the blowup X of P^3 along a line l. Runs the whole
/// chain: (-K_X|_E)^2 = 6 fixes -K_X|_E = C + 3Z, the section C bounds eps by 3,
/// eps(E, X) = eps(l, P^3) - 1 = 3 and the contradiction certificate pins eps = 3.
SeshadriEstimate blowup_line_fiber_certificate();

}  // namespace slopestab
