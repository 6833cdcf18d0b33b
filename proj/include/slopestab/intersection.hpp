#pragma once

#include <vector>

#include "slopestab/polynomial.hpp"
#include "slopestab/scenario.hpp"
#include "slopestab/surd.hpp"

namespace slopestab {

// Intersection numbers on the blowup sigma: X^ -> X along a smooth curve Z with
// exceptional divisor E. All polynomials are in the twist parameter x of the
// class sigma^*L - xE.

/// (sigma^*L - xE)^{n-1} . E = x^{n-2} ((n-1) L.Z - p x).
Polynomial exceptional_restriction_poly(const CurveScenario& s);

/// Entry i is (sigma^*L)^i . (-E)^{n-1-i} . E for i = 0..n-1: -p, L.Z, then zeros.
std::vector<Rational> e_power_table(const CurveScenario& s);

/// a_0(x) = (sigma^*L - xE)^n / n! = (L^n - n (L.Z) x^{n-1} + p x^n) / n!.
Polynomial a0_poly(const CurveScenario& s);

/// a_1(x) = -K_{X^} . (sigma^*L - xE)^{n-1} / (2 (n-1)!) with
/// K_{X^} = sigma^*K_X + (n-2) E. Requires n >= 3.
Polynomial a1_poly(const CurveScenario& s);

/// a~_i(x) = a_i(0) - a_i(x).
Polynomial a0_tilde(const CurveScenario& s);
Polynomial a1_tilde(const CurveScenario& s);

/// (-K_{X~})^2 . E for the blowup of a Fano threefold along a smooth curve C,
/// given -K_X.C and g(C).
Rational anticanonical_square_exceptional(const Rational& anticanonical_degree, int genus);

/// (n-1) L.Z - lambda p, positive on (0, eps) for every smooth curve.
Surd restriction_positivity(const CurveScenario& s, const Surd& lambda);

/// Rejects a Seshadri lower bound that already violates the positivity above
/// at its endpoint, i.e. (n-1) L.Z - eps p < 0.
void require_consistent_epsilon(const CurveScenario& s, const Surd& epsilon_lower);

}  // namespace slopestab
