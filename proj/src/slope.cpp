#include "slopestab/slope.hpp"

#include "slopestab/error.hpp"
#include "slopestab/intersection.hpp"

namespace slopestab {

namespace {

void require_curve_formula(const CurveScenario& s) {
  if (s.n < 3) {
    throw Error(ErrorKind::DimensionTooSmall,
                "curve quotient slope needs n >= 3 (curves are divisors when n = 2), got n = " +
                    std::to_string(s.n));
  }
}

void require_positive_lambda(const Rational& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorKind::InvalidScenario, "lambda must be positive, got " + lambda.to_string());
}

}  // namespace

Rational slope_mu(const CurveScenario& s) {
  return -Rational(s.n) * s.canonical_mixed / (Rational(2) * s.top_self_intersection);
}

QuotientSlopeReport quotient_slope_closed(const CurveScenario& s, const Rational& lambda) {
  require_curve_formula(s);
  require_positive_lambda(lambda);
  const Rational n(s.n), d(s.degree), p(s.normal_degree), g(s.genus);
  const Rational n_sq_minus_1 = n * n - 1;

  QuotientSlopeReport r;
  r.lambda = lambda;
  r.numerator = n * n * n_sq_minus_1 * d - lambda * n * (n + 1) * ((n - 2) * p + 2 * (g - 1));
  r.denominator = 2 * n * lambda * ((n + 1) * d - lambda * p);
  if (r.denominator.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator,
                "quotient slope denominator vanishes at lambda = " + lambda.to_string() + " for " + describe(s));
  }
  r.value = r.numerator / r.denominator;
  return r;
}

Rational quotient_slope_integral(const CurveScenario& s, const Rational& lambda) {
  require_curve_formula(s);
  require_positive_lambda(lambda);
  const Polynomial t0 = a0_tilde(s);
  const Polynomial t1 = a1_tilde(s);
  const Polynomial upper = integrate_from_zero(t1 + t0.derivative() * Rational(1, 2));
  const Polynomial lower = integrate_from_zero(t0);
  const Rational den = lower(lambda);
  if (den.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "integral of a~_0 vanishes at lambda = " + lambda.to_string());
  }
  return upper(lambda) / den;
}

QuotientSlopeReport quotient_slope_checked(const CurveScenario& s, const Rational& lambda) {
  QuotientSlopeReport r = quotient_slope_closed(s, lambda);
  r.via_integral = quotient_slope_integral(s, lambda);
  if (*r.via_integral != r.value) {
    throw Error(ErrorKind::InvariantViolation, "closed form " + r.value.to_string() + " != integral " +
                                                   r.via_integral->to_string() + " for " + describe(s));
  }
  return r;
}

Polynomial destabilizing_quadratic(const CurveScenario& s) {
  require_curve_formula(s);
  const Rational n(s.n), d(s.degree), p(s.normal_degree), g(s.genus);
  const Rational mu = slope_mu(s);
  return Polynomial({n * (n * n - 1) * d,
                     -(n + 1) * ((n - 2) * p + 2 * (g - 1) + 2 * d * mu),
                     2 * p * mu});
}

Rational fano_f_boundary_value(int n, std::int64_t p) {
  if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "f(p+2) needs n >= 3");
  const Rational shifted(p - n + 1);
  return Rational(p + 2) * shifted * (Rational(n) * shifted + 2);
}

Polynomial rfano_identity_residual_poly(const CurveScenario& s) {
  if (!s.anticanonical) throw Error(ErrorKind::NotAnticanonical, "identity holds for L = -K_X only");
  require_curve_formula(s);
  const Rational mu = slope_mu(s);
  const Polynomial t0 = a0_tilde(s);
  const Polynomial lhs = t0 * (-mu) + a1_tilde(s) + t0.derivative() * Rational(1, 2);
  const Polynomial r_minus_x({Rational(s.codimension()), Rational(-1)});
  const Rational scale = Rational(mpz_class(1), 2 * factorial(static_cast<unsigned>(s.n - 1)));
  return lhs - r_minus_x * exceptional_restriction_poly(s) * scale;
}

Rational rfano_identity_residual(const CurveScenario& s, const Rational& x) {
  return rfano_identity_residual_poly(s)(x);
}

}  // namespace slopestab
