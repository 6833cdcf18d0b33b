#include <doctest.h>

#include "oracles.hpp"
#include "slopestab/error.hpp"
#include "slopestab/slope.hpp"

using namespace slopestab;
using testing::ScenarioGen;

TEST_CASE("slope of an anticanonical polarization") {
  CHECK(slope_mu(CurveScenario::fano(3, 0, 1, 54)) == Rational(3, 2));
  CHECK(slope_mu(CurveScenario::fano(7, 0, 1, 3)) == Rational(7, 2));
  // -n K.L^{n-1} / (2 L^n) = 2 * 4 / 8
  CHECK(slope_mu(CurveScenario::polarized(2, 0, 1, 0, 4, -4)) == Rational(1));
  CHECK(slope_mu(CurveScenario::polarized(3, 0, 1, 0, 8, -4)) == Rational(3, 4));
}

TEST_CASE("closed quotient slope examples") {
  const auto blp3 = CurveScenario::fano(3, 0, 1, 54);
  const auto r = quotient_slope_closed(blp3, 1);
  CHECK(r.value == Rational(18, 5));
  CHECK(r.numerator == Rational(108));
  CHECK(r.denominator == Rational(30));
  CHECK(quotient_slope_closed(blp3, 2).value == Rational(2));
  CHECK(quotient_slope_closed(blp3, 3).value == Rational(10, 7));
  CHECK(quotient_slope_closed(CurveScenario::fano(3, 0, 2, 10), 3).value == Rational(3, 2));
  // p = 0 forces -K.Z = 2 for a rational curve; then mu_n = n/2 = mu
  for (int n = 3; n <= 9; ++n) {
    CHECK(quotient_slope_closed(CurveScenario::fano(n, 0, 2, 5), n).value == Rational(n, 2));
    // for other L.Z the value at lambda = n is ((n-1) L.Z + 2) / (2 L.Z)
    for (int d = 1; d <= 5; ++d) {
      const auto s = CurveScenario::polarized(n, 0, d, 0, 5, -3);
      CHECK(quotient_slope_closed(s, n).value == Rational((n - 1) * d + 2, 2 * d));
    }
  }
}

TEST_CASE("integral route matches the closed form") {
  CHECK(quotient_slope_integral(CurveScenario::fano(3, 0, 1, 54), 1) == Rational(18, 5));
  ScenarioGen gen(201);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const auto s = (i % 2 == 0) ? gen.general() : gen.fano();
    const Rational lambda = gen.lambda_in(gen.epsilon(s));
    const auto r = quotient_slope_checked(s, lambda);
    REQUIRE(r.via_integral.has_value());
    CHECK(*r.via_integral == r.value);
    ++checked;
  }
  CHECK(checked == 150);
}

TEST_CASE("quotient slope preconditions") {
  const auto surface = CurveScenario::polarized(2, 0, 1, 0, 1, -1);
  CHECK_THROWS_AS(quotient_slope_closed(surface, 1), Error);
  try {
    // (n+1) d - lambda p = 4 - 4 = 0
    quotient_slope_closed(CurveScenario::polarized(3, 0, 1, 1, 1, -1), 4);
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDenominator);
  }
  CHECK_THROWS_AS(quotient_slope_closed(CurveScenario::fano(3, 0, 1, 54), 0), Error);
}

TEST_CASE("destabilizing quadratic in the anticanonical rational case") {
  for (int n = 3; n <= 8; ++n) {
    for (int d = 1; d <= 7; ++d) {
      const auto s = CurveScenario::fano(n, 0, d, 17);
      const Rational N(n), P(d - 2);
      const Polynomial expect{N * (N * N - 1) * (P + 2), Rational(-2) * (N * N - 1) * (P + 1), P * N};
      CHECK(destabilizing_quadratic(s) == expect);
    }
  }
  CHECK(destabilizing_quadratic(CurveScenario::fano(3, 0, 2, 5)) == Polynomial{48, -16});
  CHECK(destabilizing_quadratic(CurveScenario::fano(3, 0, 1, 5)) == Polynomial{24, 0, -3});
}

TEST_CASE("sign of f matches the sign of mu_lambda - mu") {
  ScenarioGen gen(202);
  for (int i = 0; i < 150; ++i) {
    const auto s = (i % 2 == 0) ? gen.general() : gen.fano();
    const Rational lambda = gen.lambda_in(gen.epsilon(s));
    const auto r = quotient_slope_closed(s, lambda);
    const Rational diff = r.value - slope_mu(s);
    const Rational f = destabilizing_quadratic(s)(lambda);
    CHECK(diff == Rational(s.n) * f / r.denominator);
    CHECK(r.denominator.sign() > 0);
    CHECK(diff.sign() == f.sign());
  }
}

TEST_CASE("f at p + 2") {
  CHECK(fano_f_boundary_value(4, 1) == Rational(36));
  CHECK(fano_f_boundary_value(3, 3) == Rational(25));
  for (int n = 3; n <= 10; ++n) {
    CHECK(fano_f_boundary_value(n, n - 1).is_zero());
    for (int p = -1; p <= n; ++p) {
      const auto s = CurveScenario::fano(n, 0, p + 2, 3);
      CHECK(fano_f_boundary_value(n, p) == destabilizing_quadratic(s)(Rational(p + 2)));
    }
  }
}

TEST_CASE("rational Fano identity residual vanishes") {
  CHECK(rfano_identity_residual(CurveScenario::fano(3, 0, 1, 54), Rational(1, 2)).is_zero());
  CHECK(rfano_identity_residual(CurveScenario::fano(5, 0, 2, 99), Rational(2)).is_zero());
  ScenarioGen gen(203);
  for (int i = 0; i < 60; ++i) CHECK(rfano_identity_residual_poly(gen.fano(3, 8, 3)).is_zero());
  try {
    rfano_identity_residual_poly(CurveScenario::polarized(3, 0, 1, -1, 5, 1));
    FAIL("expected NotAnticanonical");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnticanonical);
  }
}
