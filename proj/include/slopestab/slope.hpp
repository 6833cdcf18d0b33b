#pragma once

#include <optional>

#include "slopestab/polynomial.hpp"
#include "slopestab/scenario.hpp"

namespace slopestab {

struct QuotientSlopeReport {
  Rational lambda;
  Rational value;
  Rational numerator;
  Rational denominator;
  /// Same quantity computed by integrating a~_0, a~_1 (when requested).
  std::optional<Rational> via_integral;
};

/// mu(X, L) = -n K_X.L^{n-1} / (2 L^n). Never short-cut to n/2.
Rational slope_mu(const CurveScenario& s);

/// Closed form of mu_lambda(O_Z) for a smooth curve, n >= 3:
///
///   n^2 (n^2-1) L.Z - lambda n (n+1) [(n-2) p + 2(g-1)]
///   ---------------------------------------------------
///          2 n lambda [(n+1) L.Z - lambda p]
///
/// Throws ZeroDenominator when lambda is outside the range where the
/// denominator is nonzero.
QuotientSlopeReport quotient_slope_closed(const CurveScenario& s, const Rational& lambda);

/// Same quantity from the definition: int_0^lambda (a~_1 + a~_0'/2) over int_0^lambda a~_0.
Rational quotient_slope_integral(const CurveScenario& s, const Rational& lambda);

/// Closed form with the integral cross-check attached.
QuotientSlopeReport quotient_slope_checked(const CurveScenario& s, const Rational& lambda);

/// f(lambda) = 2 p mu lambda^2 - (n+1)[(n-2)p + 2(g-1) + 2 (L.Z) mu] lambda + n(n^2-1) L.Z.
/// mu_lambda - mu = n f(lambda) / denominator, so Z destabilizes iff f <= 0
/// somewhere on (0, eps].
Polynomial destabilizing_quadratic(const CurveScenario& s);

/// f(p+2) in the anticanonical rational-curve case, via its factorisation
/// (p+2)(p-n+1){n(p-n+1)+2}.
Rational fano_f_boundary_value(int n, std::int64_t p);

/// -mu a~_0 + a~_1 + a~_0'/2 - (r - x) (sigma^*L - xE)^{n-1}.E / (2 (n-1)!), r = n-1.
/// Identically zero for anticanonical curve scenarios.
Polynomial rfano_identity_residual_poly(const CurveScenario& s);
Rational rfano_identity_residual(const CurveScenario& s, const Rational& x);

}  // namespace slopestab
