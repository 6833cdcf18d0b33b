#include "slopestab/intersection.hpp"

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

void require_dimension(const CurveScenario& s, int minimum, const char* what) {
  if (s.n < minimum) {
    throw Error(ErrorKind::DimensionTooSmall,
                std::string(what) + " needs n >= " + std::to_string(minimum) + ", got " + std::to_string(s.n));
  }
}

Rational inverse_factorial(unsigned k) { return Rational(mpz_class(1), factorial(k)); }

}  // namespace

Polynomial exceptional_restriction_poly(const CurveScenario& s) {
  require_dimension(s, 2, "exceptional restriction");
  const auto m = static_cast<unsigned>(s.n - 2);
  return Polynomial::monomial(Rational((s.n - 1) * s.degree), m) -
         Polynomial::monomial(Rational(s.normal_degree), m + 1);
}

std::vector<Rational> e_power_table(const CurveScenario& s) {
  require_dimension(s, 2, "E-power table");
  std::vector<Rational> table(static_cast<std::size_t>(s.n));
  table[0] = Rational(-s.normal_degree);
  table[1] = Rational(s.degree);
  return table;
}

Polynomial a0_poly(const CurveScenario& s) {
  require_dimension(s, 2, "a0");
  const auto n = static_cast<unsigned>(s.n);
  Polynomial p = Polynomial::constant(s.top_self_intersection) -
                 Polynomial::monomial(Rational(s.n * s.degree), n - 1) +
                 Polynomial::monomial(Rational(s.normal_degree), n);
  return p * inverse_factorial(n);
}

Polynomial a1_poly(const CurveScenario& s) {
  require_dimension(s, 3, "a1");
  const auto n = static_cast<unsigned>(s.n);
  // K_{X^}.(sigma^*L - xE)^{n-1}
  //   = K_X.L^{n-1} - (K_X.Z) x^{n-1} + (n-2) x^{n-2} ((n-1) L.Z - p x)
  Polynomial canonical = Polynomial::constant(s.canonical_mixed) -
                         Polynomial::monomial(s.canonical_dot_curve(), n - 1) +
                         Rational(s.n - 2) * exceptional_restriction_poly(s);
  return canonical * (-inverse_factorial(n - 1) / Rational(2));
}

Polynomial a0_tilde(const CurveScenario& s) {
  const Polynomial a0 = a0_poly(s);
  return Polynomial::constant(a0(Rational(0))) - a0;
}

Polynomial a1_tilde(const CurveScenario& s) {
  const Polynomial a1 = a1_poly(s);
  return Polynomial::constant(a1(Rational(0))) - a1;
}

Rational anticanonical_square_exceptional(const Rational& anticanonical_degree, int genus) {
  return anticanonical_degree + Rational(2 - 2 * genus);
}

Surd restriction_positivity(const CurveScenario& s, const Surd& lambda) {
  return Surd(Rational((s.n - 1) * s.degree)) - lambda * Surd(Rational(s.normal_degree));
}

void require_consistent_epsilon(const CurveScenario& s, const Surd& epsilon_lower) {
  if (restriction_positivity(s, epsilon_lower).sign() < 0) {
    throw Error(ErrorKind::ScenarioInconsistent,
                "Seshadri bound " + epsilon_lower.to_string() + " violates (n-1)L.Z - eps*p >= 0 for " +
                    describe(s));
  }
}

}  // namespace slopestab
