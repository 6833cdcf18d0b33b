#include <doctest.h>

#include "oracles.hpp"
#include "slopestab/error.hpp"
#include "slopestab/intersection.hpp"
#include "slopestab/slope.hpp"

using namespace slopestab;
using testing::ScenarioGen;

namespace {

Polynomial x_poly(std::initializer_list<Rational> c) { return Polynomial(c); }

}  // namespace

TEST_CASE("exceptional restriction examples") {
  const auto s = CurveScenario::fano(3, 0, 1, 22);
  CHECK(exceptional_restriction_poly(s) == x_poly({0, 2, 1}));
  const auto t = CurveScenario::fano(4, 0, 2, 512);
  CHECK(exceptional_restriction_poly(t) == x_poly({0, 0, 6}));
  ScenarioGen gen(101);
  for (int i = 0; i < 50; ++i) {
    const auto r = gen.general();
    CHECK(exceptional_restriction_poly(r)(Rational(0)).is_zero());
    CHECK(exceptional_restriction_poly(r) == testing::restriction_oracle(r));
  }
}

TEST_CASE("E-power table examples") {
  CHECK(e_power_table(CurveScenario::fano(3, 0, 1, 22)) == std::vector<Rational>{1, 1, 0});
  CHECK(e_power_table(CurveScenario::polarized(5, 0, 3, 0, 1, -1)) == std::vector<Rational>{0, 3, 0, 0, 0});
  CHECK(e_power_table(CurveScenario::polarized(2, 0, 1, 0, 1, -1)) == std::vector<Rational>{0, 1});
}

TEST_CASE("E-power table agrees with the monomial oracle") {
  ScenarioGen gen(102);
  for (int i = 0; i < 40; ++i) {
    const auto s = gen.general(2, 8);
    const auto table = e_power_table(s);
    for (int k = 0; k < s.n; ++k) {
      // (sigma^*L)^k (-E)^{n-1-k} E = (-1)^{n-1-k} (sigma^*L)^k E^{n-k}
      const Rational sign = ((s.n - 1 - k) % 2 == 0) ? Rational(1) : Rational(-1);
      CHECK(table[static_cast<std::size_t>(k)] == sign * testing::monomial_degree(s, k, 0, s.n - k));
    }
  }
}

TEST_CASE("a0 examples and oracle") {
  const auto s = CurveScenario::fano(3, 0, 1, 22);
  const Polynomial a0 = a0_poly(s);
  CHECK(a0 == x_poly({Rational(22, 6), 0, Rational(-3, 6), Rational(-1, 6)}));
  CHECK(a0(Rational(0)) == Rational(22, 6));
  ScenarioGen gen(103);
  for (int i = 0; i < 60; ++i) {
    const auto r = gen.general(2, 8);
    const Polynomial p = a0_poly(r);
    CHECK(p == testing::a0_oracle(r));
    CHECK(p(Rational(0)) == r.top_self_intersection / testing::factorial_q(r.n));
    // d/dx a0 = -(sigma^*L - xE)^{n-1}.E / (n-1)!
    CHECK(p.derivative() == exceptional_restriction_poly(r) * (Rational(-1) / testing::factorial_q(r.n - 1)));
  }
}

TEST_CASE("a1 examples and oracle") {
  const auto s = CurveScenario::fano(3, 0, 1, 22);
  const Polynomial a1 = a1_poly(s);
  // -[-22 - (-1) x^2 + x(2 + x)] / 4 = (22 - 2x - 2x^2) / 4
  CHECK(a1 == x_poly({Rational(22, 4), Rational(-2, 4), Rational(-2, 4)}));
  CHECK(a1 == testing::a1_oracle(s));
  ScenarioGen gen(104);
  for (int i = 0; i < 60; ++i) {
    const auto r = gen.general();
    CHECK(a1_poly(r) == testing::a1_oracle(r));
    const auto f = gen.fano();
    CHECK(a1_poly(f)(Rational(0)) == f.top_self_intersection / (Rational(2) * testing::factorial_q(f.n - 1)));
    // mu = a1(0) / a0(0)
    CHECK(slope_mu(f) == a1_poly(f)(Rational(0)) / a0_poly(f)(Rational(0)));
  }
  CHECK_THROWS_AS(a1_poly(CurveScenario::polarized(2, 0, 1, 0, 1, -1)), Error);
}

TEST_CASE("tilde polynomials vanish at zero") {
  ScenarioGen gen(105);
  for (int i = 0; i < 30; ++i) {
    const auto s = gen.general();
    CHECK(a0_tilde(s)(Rational(0)).is_zero());
    CHECK(a1_tilde(s)(Rational(0)).is_zero());
    CHECK(a0_tilde(s) + a0_poly(s) == Polynomial::constant(a0_poly(s)(Rational(0))));
  }
}

TEST_CASE("anticanonical square of the exceptional divisor") {
  CHECK(anticanonical_square_exceptional(4, 0) == Rational(6));
  CHECK(anticanonical_square_exceptional(2, 1) == Rational(2));
  CHECK(anticanonical_square_exceptional(1, 0) == Rational(3));
  // -K of the blowup is sigma^*(-K_X) - E for n = 3, so its square on E is the
  // exceptional restriction at x = 1, which is also -2 a1'(1).
  for (auto [d, g] : {std::pair{4, 0}, {2, 1}, {1, 0}, {5, 2}, {7, 3}}) {
    const auto s = CurveScenario::fano(3, g, d, 10);
    const Rational expect = anticanonical_square_exceptional(d, g);
    CHECK(testing::restriction_oracle(s)(Rational(1)) == expect);
    CHECK(Rational(-2) * a1_poly(s).derivative()(Rational(1)) == expect);
  }
}

TEST_CASE("restriction positivity and epsilon consistency") {
  const auto line = CurveScenario::fano(3, 0, 4, 64);
  CHECK(restriction_positivity(line, Surd(4)).sign() == 0);
  CHECK_NOTHROW(require_consistent_epsilon(line, Surd(4)));
  try {
    require_consistent_epsilon(line, Surd(5));
    FAIL("expected ScenarioInconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ScenarioInconsistent);
  }
  // p <= 0 never constrains eps
  CHECK_NOTHROW(require_consistent_epsilon(CurveScenario::fano(3, 0, 1, 54), Surd(100)));
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(CurveScenario::fano(1, 0, 1, 1), Error);
  CHECK_THROWS_AS(CurveScenario::fano(3, 0, 0, 1), Error);
  CHECK_THROWS_AS(CurveScenario::fano(3, 0, 1, 0), Error);
  CurveScenario bad = CurveScenario::fano(3, 0, 1, 10);
  bad.normal_degree = 3;
  try {
    bad.validate();
    FAIL("expected ScenarioInconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ScenarioInconsistent);
  }
  const auto s = CurveScenario::fano(4, 1, 3, 7);
  CHECK(s.normal_degree == 3);
  CHECK(s.canonical_dot_curve() == Rational(-3));
  CHECK(s.codimension() == 3);
}
