#pragma once

#include <cstdint>
#include <string>

#include "slopestab/rational.hpp"

namespace slopestab {

/// A smooth curve Z of genus g on a polarized manifold (X, L) of dimension n.
///
/// degree is L.Z, normal_degree is deg N_{Z/X}, top_self_intersection is L^n
/// and canonical_mixed is K_X.L^{n-1}. K_X.Z is never stored; it follows from
/// adjunction as 2g - 2 - normal_degree.
struct CurveScenario {
  int n = 3;
  int genus = 0;
  std::int64_t degree = 1;
  std::int64_t normal_degree = -1;
  Rational top_self_intersection = 1;
  Rational canonical_mixed = -1;
  bool anticanonical = true;

  /// L = -K_X: K_X.L^{n-1} = -L^n and deg N = L.Z + 2g - 2.
  static CurveScenario fano(int n, int genus, std::int64_t degree, Rational anticanonical_volume);
  static CurveScenario polarized(int n, int genus, std::int64_t degree, std::int64_t normal_degree,
                                 Rational top_self_intersection, Rational canonical_mixed);

  /// Codimension of Z in X.
  int codimension() const { return n - 1; }
  Rational canonical_dot_curve() const { return Rational(2 * genus - 2 - normal_degree); }

  /// Throws InvalidScenario / ScenarioInconsistent.
  void validate() const;

  bool operator==(const CurveScenario&) const = default;
};

std::string describe(const CurveScenario& s);

}  // namespace slopestab
