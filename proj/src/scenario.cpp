#include "slopestab/scenario.hpp"

#include <utility>

#include "slopestab/error.hpp"

namespace slopestab {

CurveScenario CurveScenario::fano(int n, int genus, std::int64_t degree, Rational anticanonical_volume) {
  CurveScenario s;
  s.n = n;
  s.genus = genus;
  s.degree = degree;
  s.normal_degree = degree + 2 * genus - 2;
  s.canonical_mixed = -anticanonical_volume;
  s.top_self_intersection = std::move(anticanonical_volume);
  s.anticanonical = true;
  s.validate();
  return s;
}

CurveScenario CurveScenario::polarized(int n, int genus, std::int64_t degree, std::int64_t normal_degree,
                                       Rational top_self_intersection, Rational canonical_mixed) {
  CurveScenario s;
  s.n = n;
  s.genus = genus;
  s.degree = degree;
  s.normal_degree = normal_degree;
  s.top_self_intersection = std::move(top_self_intersection);
  s.canonical_mixed = std::move(canonical_mixed);
  s.anticanonical = false;
  s.validate();
  return s;
}

void CurveScenario::validate() const {
  if (n < 2) throw Error(ErrorKind::InvalidScenario, "dimension n must be >= 2, got " + std::to_string(n));
  if (genus < 0) throw Error(ErrorKind::InvalidScenario, "genus must be >= 0");
  if (degree < 1) throw Error(ErrorKind::InvalidScenario, "degree L.Z must be >= 1");
  if (top_self_intersection.sign() <= 0) throw Error(ErrorKind::InvalidScenario, "L^n must be positive");
  if (!anticanonical) return;
  if (canonical_mixed != -top_self_intersection) {
    throw Error(ErrorKind::ScenarioInconsistent, "anticanonical polarization needs K_X.L^{n-1} = -L^n");
  }
  // adjunction: -K_X.Z = deg N + 2 - 2g
  if (normal_degree != degree + 2 * genus - 2) {
    throw Error(ErrorKind::ScenarioInconsistent,
                "anticanonical polarization needs deg N = L.Z + 2g - 2 = " +
                    std::to_string(degree + 2 * genus - 2) + ", got " + std::to_string(normal_degree));
  }
}

std::string describe(const CurveScenario& s) {
  return "n=" + std::to_string(s.n) + " g=" + std::to_string(s.genus) + " L.Z=" + std::to_string(s.degree) +
         " degN=" + std::to_string(s.normal_degree) + " L^n=" + s.top_self_intersection.to_string() +
         " K.L^(n-1)=" + s.canonical_mixed.to_string() + (s.anticanonical ? " (L=-K)" : "");
}

}  // namespace slopestab
