#include <doctest.h>

#include <algorithm>
#include <random>

#include "slopestab/error.hpp"
#include "slopestab/seshadri.hpp"

using namespace slopestab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvariantViolation;
}

bool has_rule(const SeshadriEstimate& e, const std::string& rule) {
  return std::any_of(e.provenance().begin(), e.provenance().end(), [&](const auto& p) { return p.rule == rule; });
}

SeshadriEstimate interval(Rational lo, Rational hi) {
  return SeshadriEstimate::between(Surd(lo), Surd(hi), {"bounds", "test interval"});
}

}  // namespace

TEST_CASE("estimate construction and rendering") {
  CHECK(SeshadriEstimate::exact(Surd(4), {"r", "s"}).to_string() == "exact 4");
  CHECK(interval(2, 3).to_string() == "[2, 3]");
  CHECK(SeshadriEstimate::bounded_below(Surd(0), {"r", "s"}).to_string() == "[0, +inf)");
  CHECK(kind_of([] { interval(3, 2); }) == ErrorKind::InconsistentBounds);
  CHECK(kind_of([] { SeshadriEstimate::bounded_below(Surd(-1), {"r", "s"}); }) == ErrorKind::InconsistentBounds);
  CHECK(SeshadriEstimate::exact(Surd::sqrt(8), {"r", "s"}).value() == Surd::sqrt(8));
  CHECK_FALSE(interval(2, 3).value().has_value());
}

TEST_CASE("linear subspaces of projective space") {
  for (int n : {2, 3, 9}) {
    const auto e = linear_subspace_exact(n);
    CHECK(e.is_exact());
    CHECK(*e.value() == Surd(n + 1));
    CHECK(has_rule(e, "witness-curve"));
  }
  const auto point = linear_subspace_exact(2, 2);
  CHECK(*point.value() == Surd(3));
  const auto line = linear_subspace_exact(3, 2);
  CHECK(*line.value() == Surd(4));
  CHECK(has_rule(line, "min-rule"));
  CHECK(kind_of([] { linear_subspace_exact(3, 4); }) == ErrorKind::InvalidScenario);
}

TEST_CASE("witness and proper transform bounds") {
  CHECK(*witness_curve_upper(1).upper() == Surd(1));
  CHECK(*witness_curve_upper(3).upper() == Surd(3));
  CHECK(*witness_curve_upper(5).upper() == Surd(5));
  CHECK(witness_curve_upper(3).lower() == Surd(0));
  CHECK(kind_of([] { witness_curve_upper(0); }) == ErrorKind::NonPositiveDegree);
  CHECK(*proper_transform_upper(3, 3).upper() == Surd(1));
  CHECK(*proper_transform_upper(4, 1).upper() == Surd(4));
  CHECK(*proper_transform_upper(6, 2).upper() == Surd(3));
}

TEST_CASE("min rule") {
  const auto four = SeshadriEstimate::exact(Surd(4), {"r", "s"});
  const auto m = min_combination_lower(four, four);
  CHECK(m.lower() == Surd(4));
  CHECK_FALSE(m.upper().has_value());
  const auto lo2 = SeshadriEstimate::bounded_below(Surd(2), {"r", "a"});
  const auto lo3 = SeshadriEstimate::bounded_below(Surd(3), {"r", "b"});
  CHECK(min_combination_lower(lo2, lo3).lower() == Surd(2));
  const auto lo8 = SeshadriEstimate::bounded_below(Surd::sqrt(8), {"r", "c"});
  CHECK(min_combination_lower(lo8, lo3).lower() == Surd::sqrt(8));
}

TEST_CASE("product fiber and exceptional shift") {
  CHECK(*product_fiber_estimate(linear_subspace_exact(3, 3)).value() == Surd(4));
  CHECK(product_fiber_estimate(interval(2, 3)).to_string() == "[2, 3]");
  CHECK(*blowup_exceptional_shift(linear_subspace_exact(3, 2)).value() == Surd(3));
  for (int n = 2; n <= 8; ++n) CHECK(*blowup_exceptional_shift(linear_subspace_exact(n)).value() == Surd(n));
  CHECK(blowup_exceptional_shift(interval(2, 3)).to_string() == "[1, 2]");
  CHECK(kind_of([] { blowup_exceptional_shift(interval(Rational(1, 2), 3)); }) == ErrorKind::ShiftBelowZero);
}

TEST_CASE("nested restriction") {
  const auto two = SeshadriEstimate::exact(Surd(2), {"r", "z"});
  const auto three = SeshadriEstimate::exact(Surd(3), {"r", "y"});
  CHECK(*nested_restriction(two, three).value() == Surd(2));
  CHECK(kind_of([&] { nested_restriction(three, three); }) == ErrorKind::HypothesisNotCertified);
  CHECK(nested_restriction(interval(1, 2), interval(3, 4)).to_string() == "[1, 2]");
}

TEST_CASE("moving curve and point caps") {
  CHECK(*moving_curve_upper(CurveScenario::fano(3, 0, 4, 64)).upper() == Surd(4));
  CHECK(*moving_curve_upper(CurveScenario::fano(3, 0, 3, 64)).upper() == Surd(3));
  CHECK(kind_of([] { moving_curve_upper(CurveScenario::fano(3, 0, 2, 64)); }) == ErrorKind::HypothesisFails);
  CHECK(kind_of([] { moving_curve_upper(CurveScenario::fano(3, 1, 4, 64)); }) == ErrorKind::HypothesisFails);
  CHECK(*point_seshadri_cap(4, false).upper() == Surd(4));
  CHECK_FALSE(point_seshadri_cap(4, false).is_exact());
  CHECK(*point_seshadri_cap(4, true).value() == Surd(5));
  CHECK(kind_of([] { point_seshadri_cap(2, false); }) == ErrorKind::DimensionTooSmall);
  CHECK(*quadric_surface_fiber(3).value() == Surd(3));
}

TEST_CASE("contradiction certificate") {
  const auto w = witness_curve_upper(3);
  const auto y = SeshadriEstimate::exact(Surd(3), {"r", "y"});
  const auto zy = quadric_surface_fiber(3);
  const auto e = contradiction_certificate(w, y, zy);
  CHECK(*e.value() == Surd(3));
  CHECK(e.provenance().back().rule == "contradiction");
  CHECK(kind_of([&] { contradiction_certificate(witness_curve_upper(4), y, zy); }) ==
        ErrorKind::HypothesisNotCertified);
  CHECK(kind_of([&] { contradiction_certificate(w, y, quadric_surface_fiber(2)); }) ==
        ErrorKind::HypothesisNotCertified);
  CHECK(kind_of([&] { contradiction_certificate(SeshadriEstimate::bounded_below(Surd(1), {"r", "s"}), y, zy); }) ==
        ErrorKind::HypothesisNotCertified);
}

TEST_CASE("fiber of the blowup of P^3 along a line") {
  const auto e = blowup_line_fiber_certificate();
  CHECK(e.is_exact());
  CHECK(*e.value() == Surd(3));
  for (const char* rule : {"linear-subspace", "exceptional-shift", "exceptional-square", "section-witness",
                           "quadric-surface-fiber", "contradiction"}) {
    CAPTURE(rule);
    CHECK(has_rule(e, rule));
  }
  CHECK(e.provenance().back().rule == "contradiction");
}

TEST_CASE("combining estimates never widens them") {
  std::mt19937_64 rng(301);
  std::uniform_int_distribution<int> dist(0, 40);
  for (int i = 0; i < 200; ++i) {
    int a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (std::max(a, c) > std::min(b, d)) continue;  // disjoint enclosures are inconsistent
    const auto e1 = interval(Rational(a, 4), Rational(b, 4));
    const auto e2 = interval(Rational(c, 4), Rational(d, 4));
    const auto m = combine(e1, e2);
    CHECK(m.lower() >= e1.lower());
    CHECK(m.lower() >= e2.lower());
    CHECK(*m.upper() <= *e1.upper());
    CHECK(*m.upper() <= *e2.upper());
    CHECK_FALSE(m.provenance().empty());
  }
  CHECK(kind_of([] { combine(interval(1, 2), interval(3, 4)); }) == ErrorKind::InconsistentBounds);
}
