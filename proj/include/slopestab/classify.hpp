#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slopestab/scenario.hpp"
#include "slopestab/seshadri.hpp"
#include "slopestab/surd.hpp"

namespace slopestab {

enum class Status { Stable, SemistableNotStable, StrictlyDestabilized, ConditionalOnSeshadri };

std::string_view to_string(Status status) noexcept;

/// Which lambda the stability test ranges over. Closed includes lambda = eps;
/// Open is the stricter reading that excludes it.
enum class LambdaRange { Closed, Open };

struct Verdict {
  Status status = Status::Stable;
  /// lambda in the tested range where f < 0 (strict) or f = 0 (semistable).
  std::optional<Surd> witness;
  /// Rule that decided the verdict plus the trusted flags it relied on.
  std::string rule;
  /// Residual inequality on eps, only for ConditionalOnSeshadri.
  std::optional<std::string> condition;

  bool operator==(const Verdict&) const = default;
};

/// Splitting type O(a_1) + ... + O(a_k) of a bundle on P^1, sorted ascending.
class BundleSplitting {
 public:
  explicit BundleSplitting(std::vector<std::int64_t> twists);

  const std::vector<std::int64_t>& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  std::int64_t degree() const;
  std::string to_string() const;

  bool operator==(const BundleSplitting&) const = default;

 private:
  std::vector<std::int64_t> twists_;
};

struct FanoBundleResult {
  bool is_fano_projectivization = false;
  /// Twists shifted so the smallest is 0.
  BundleSplitting normalized{{0}};
  /// Degree of the normalized bundle.
  std::int64_t normalized_degree = 0;
  /// -K_V . l for the section l given by the trivial quotient: 2 - degree.
  std::int64_t minus_k_dot_section = 0;
};

/// P(O(a_1) + ... + O(a_k)) over P^1 is Fano iff the normalized degree is < 2,
/// i.e. the bundle is a twist of O^k or of O^{k-1} + O(1). Needs k >= 2.
FanoBundleResult fano_bundle_check(const BundleSplitting& bundle);

/// N_{Z/X} is O(a)^{n-1} or O(a)^{n-2} + O(a+1). Needs rank n - 1.
bool admissible_normal_bundle(int n, const BundleSplitting& bundle);

enum class NormalShape { Trivial, TrivialPlusMinusOne, ProjectiveLine };

std::string_view to_string(NormalShape shape) noexcept;

struct ShapeFilterResult {
  std::vector<NormalShape> allowed;
  bool passes = false;
};

/// Normal bundles a non-stable smooth curve can have: trivial or a line in P^n
/// for n >= 4, plus O + O(-1) for threefolds.
ShapeFilterResult theorem_bc_shape_filter(int n, const BundleSplitting& bundle, bool is_projective_line);

/// Trichotomy for a smooth rational curve on an anticanonically polarized
/// Fano manifold, split by -K_X.Z = 2, 1 and >= 3 (p = 0, -1, >= 1).
Verdict degree_regime_verdict(const CurveScenario& s, const SeshadriEstimate& e,
                              LambdaRange range = LambdaRange::Closed);

/// Generic route: exact sign analysis of destabilizing_quadratic on (0, eps].
/// Valid for any polarization; used as a cross-check of degree_regime_verdict.
Verdict quadratic_sign_verdict(const CurveScenario& s, const SeshadriEstimate& e,
                               LambdaRange range = LambdaRange::Closed);

struct ClassifyFlags {
  bool is_projective_space = false;
  bool picard_rank_one = false;
  std::optional<int> fano_index;
  /// Full splitting of N_{Z/X} when known.
  std::optional<BundleSplitting> normal_bundle;

  bool operator==(const ClassifyFlags&) const = default;
};

/// Rule cascade for L = -K_X, first match wins.
Verdict classify_curve(const CurveScenario& s, const SeshadriEstimate& e, const ClassifyFlags& flags,
                       LambdaRange range = LambdaRange::Closed);

}  // namespace slopestab
