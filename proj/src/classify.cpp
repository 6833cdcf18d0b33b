#include "slopestab/classify.hpp"

#include <algorithm>
#include <utility>

#include "slopestab/error.hpp"
#include "slopestab/intersection.hpp"
#include "slopestab/slope.hpp"

namespace slopestab {

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Stable: return "Stable";
    case Status::SemistableNotStable: return "SemistableNotStable";
    case Status::StrictlyDestabilized: return "StrictlyDestabilized";
    case Status::ConditionalOnSeshadri: return "ConditionalOnSeshadri";
  }
  return "?";
}

std::string_view to_string(NormalShape shape) noexcept {
  switch (shape) {
    case NormalShape::Trivial: return "trivial";
    case NormalShape::TrivialPlusMinusOne: return "O+O(-1)";
    case NormalShape::ProjectiveLine: return "line in P^n";
  }
  return "?";
}

BundleSplitting::BundleSplitting(std::vector<std::int64_t> twists) : twists_(std::move(twists)) {
  if (twists_.empty()) throw Error(ErrorKind::TooFewSummands, "a splitting needs at least one summand");
  std::sort(twists_.begin(), twists_.end());
}

std::int64_t BundleSplitting::degree() const {
  std::int64_t total = 0;
  for (auto a : twists_) total += a;
  return total;
}

std::string BundleSplitting::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < twists_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(twists_[i]);
  }
  return out + ")";
}

FanoBundleResult fano_bundle_check(const BundleSplitting& bundle) {
  if (bundle.rank() < 2) {
    throw Error(ErrorKind::TooFewSummands, "projectivization needs rank >= 2, got " + bundle.to_string());
  }
  std::vector<std::int64_t> shifted = bundle.twists();
  const std::int64_t base = shifted.front();
  for (auto& a : shifted) a -= base;

  FanoBundleResult r;
  r.normalized = BundleSplitting(std::move(shifted));
  r.normalized_degree = r.normalized.degree();
  r.minus_k_dot_section = 2 - r.normalized_degree;
  r.is_fano_projectivization = r.minus_k_dot_section > 0;
  return r;
}

bool admissible_normal_bundle(int n, const BundleSplitting& bundle) {
  if (n < 2 || bundle.rank() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorKind::WrongRank, "normal bundle of a curve in dimension " + std::to_string(n) +
                                          " has rank " + std::to_string(n - 1) + ", got " + bundle.to_string());
  }
  const auto& t = bundle.twists();
  const std::int64_t a = t.front();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] != a) return false;
  }
  return t.back() == a || t.back() == a + 1;
}

ShapeFilterResult theorem_bc_shape_filter(int n, const BundleSplitting& bundle, bool is_projective_line) {
  if (n < 3) throw Error(ErrorKind::DimensionTooSmall, "shape filter needs n >= 3");
  if (bundle.rank() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorKind::WrongRank, "expected rank " + std::to_string(n - 1) + ", got " + bundle.to_string());
  }
  ShapeFilterResult r;
  r.allowed.push_back(NormalShape::Trivial);
  if (n == 3) r.allowed.push_back(NormalShape::TrivialPlusMinusOne);
  r.allowed.push_back(NormalShape::ProjectiveLine);

  const auto& t = bundle.twists();
  const bool trivial = std::all_of(t.begin(), t.end(), [](std::int64_t a) { return a == 0; });
  const bool minus_one = (n == 3 && t[0] == -1 && t[1] == 0);
  r.passes = trivial || minus_one || is_projective_line;
  return r;
}

namespace {

struct Scan {
  std::optional<Surd> negative;
  std::optional<Surd> zero;
};

// Exact sign scan of f over (0, end] (or (0, end) for the open range). A missing
// end means the whole positive half-line.
Scan scan_quadratic(const Polynomial& f, const std::optional<Surd>& end, LambdaRange range) {
  Scan out;
  if (end && end->sign() <= 0) return out;

  std::vector<Surd> cuts{Surd(0)};
  for (const Surd& r : quadratic_roots(f.coefficient(2), f.coefficient(1), f.coefficient(0))) {
    if (r.sign() > 0 && (!end || r < *end)) {
      cuts.push_back(r);
      if (!out.zero) out.zero = r;
    }
  }
  for (std::size_t i = 0; i < cuts.size() && !out.negative; ++i) {
    Surd probe;
    if (i + 1 < cuts.size()) {
      probe = (cuts[i] + cuts[i + 1]) / Rational(2);
    } else if (end) {
      probe = (cuts[i] + *end) / Rational(2);
    } else {
      probe = cuts[i] + Surd(1);
    }
    if (f(probe).sign() < 0) out.negative = probe;
  }
  if (end && range == LambdaRange::Closed) {
    const int at_end = f(*end).sign();
    if (at_end < 0 && !out.negative) out.negative = *end;
    if (at_end == 0 && !out.zero) out.zero = *end;
  }
  return out;
}

Verdict verdict_from_scan(const Scan& scan, std::string rule) {
  Verdict v;
  v.rule = std::move(rule);
  if (scan.negative) {
    v.status = Status::StrictlyDestabilized;
    v.witness = scan.negative;
  } else if (scan.zero) {
    v.status = Status::SemistableNotStable;
    v.witness = scan.zero;
  }
  return v;
}

std::string range_text(LambdaRange range) { return range == LambdaRange::Closed ? "(0, eps]" : "(0, eps)"; }

Verdict threshold_verdict(const Surd& threshold, const SeshadriEstimate& e, LambdaRange range, std::string rule) {
  Verdict v;
  v.rule = std::move(rule);
  const std::string t = threshold.to_string();
  const std::optional<Surd>& upper = e.upper();
  if (range == LambdaRange::Closed) {
    if (upper && *upper < threshold) return v;
    if (e.lower() > threshold) {
      v.status = Status::StrictlyDestabilized;
      v.witness = e.lower();
      return v;
    }
    if (e.is_exact() && e.lower() == threshold) {
      v.status = Status::SemistableNotStable;
      v.witness = threshold;
      return v;
    }
    v.status = Status::ConditionalOnSeshadri;
    v.condition = "Stable iff eps < " + t + "; SemistableNotStable iff eps = " + t +
                  "; StrictlyDestabilized iff eps > " + t + " (eps in " + e.to_string() + ")";
    return v;
  }
  if (upper && *upper <= threshold) return v;
  if (e.lower() > threshold) {
    v.status = Status::StrictlyDestabilized;
    v.witness = (threshold + e.lower()) / Rational(2);
    return v;
  }
  v.status = Status::ConditionalOnSeshadri;
  v.condition = "Stable iff eps <= " + t + "; StrictlyDestabilized iff eps > " + t + " (eps in " + e.to_string() + ")";
  return v;
}

void require_rational_fano_curve(const CurveScenario& s) {
  if (s.n < 3) throw Error(ErrorKind::DimensionTooSmall, "needs n >= 3, got " + std::to_string(s.n));
  if (!s.anticanonical) throw Error(ErrorKind::NotAnticanonical, "needs L = -K_X");
  if (s.genus != 0) throw Error(ErrorKind::NonRationalCurve, "needs a rational curve, got genus " + std::to_string(s.genus));
}

std::string flag_echo(const ClassifyFlags& flags) {
  std::string out = " {isPn=" + std::string(flags.is_projective_space ? "true" : "false") +
                    ", picardRankOne=" + std::string(flags.picard_rank_one ? "true" : "false") + ", fanoIndex=" +
                    (flags.fano_index ? std::to_string(*flags.fano_index) : std::string("unknown"));
  if (flags.normal_bundle) out += ", normalBundle=" + flags.normal_bundle->to_string();
  return out + "}";
}

void validate_flags(const CurveScenario& s, const ClassifyFlags& flags) {
  if (flags.normal_bundle) {
    if (flags.normal_bundle->rank() != static_cast<std::size_t>(s.n - 1)) {
      throw Error(ErrorKind::WrongRank, "normal bundle " + flags.normal_bundle->to_string() + " must have rank " +
                                            std::to_string(s.n - 1));
    }
    if (flags.normal_bundle->degree() != s.normal_degree) {
      throw Error(ErrorKind::ScenarioInconsistent, "normal bundle " + flags.normal_bundle->to_string() +
                                                       " has degree " + std::to_string(flags.normal_bundle->degree()) +
                                                       ", scenario says " + std::to_string(s.normal_degree));
    }
  }
  if (!flags.fano_index) return;
  const int index = *flags.fano_index;
  if (index < 1 || index > s.n + 1) {
    throw Error(ErrorKind::ScenarioInconsistent, "Fano index must lie in [1, n+1], got " + std::to_string(index));
  }
  if (s.degree % index != 0) {
    throw Error(ErrorKind::ScenarioInconsistent, "-K_X.Z = " + std::to_string(s.degree) +
                                                     " is not divisible by the Fano index " + std::to_string(index));
  }
  if ((index == s.n + 1) != flags.is_projective_space) {
    throw Error(ErrorKind::ScenarioInconsistent, "Fano index n+1 characterises P^n; flags disagree");
  }
}

}  // namespace

Verdict degree_regime_verdict(const CurveScenario& s, const SeshadriEstimate& e, LambdaRange range) {
  require_rational_fano_curve(s);
  const std::int64_t p = s.normal_degree;
  const int n = s.n;

  if (p == 0) {
    return threshold_verdict(Surd(Rational(n)), e, range,
                             "-K.Z = 2: f = -2(n^2-1)(lambda - n), threshold n on " + range_text(range));
  }
  if (p == -1) {
    return threshold_verdict(Surd::sqrt(Rational(n * n - 1)), e, range,
                             "-K.Z = 1: f = -n(lambda^2 - (n^2-1)), threshold sqrt(n^2-1) on " + range_text(range));
  }

  // -K.Z >= 3: eps <= -K.Z always holds for such curves
  SeshadriEstimate bounded = e;
  try {
    bounded = combine(e, moving_curve_upper(s));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::InconsistentBounds) throw;
    throw Error(ErrorKind::ScenarioInconsistent,
                "eps lower bound " + e.lower().to_string() + " exceeds -K.Z = " + std::to_string(s.degree));
  }

  Verdict v;
  if (p != n - 1) {
    v.rule = "-K.Z >= 3, eps <= -K.Z: f > 0 on (0, p+2] since p != n-1";
    return v;
  }
  v.rule = "-K.Z = n+1, eps <= -K.Z: f >= 0 on (0, n+1] with f(n+1) = 0";
  if (range == LambdaRange::Open) return v;
  const Surd top(Rational(n + 1));
  if (bounded.is_exact() && bounded.lower() == top) {
    v.status = Status::SemistableNotStable;
    v.witness = top;
  } else if (*bounded.upper() == top) {
    v.status = Status::ConditionalOnSeshadri;
    v.condition = "semistable; Stable iff eps < " + top.to_string() + ", SemistableNotStable iff eps = " +
                  top.to_string() + " (eps in " + bounded.to_string() + ")";
  }
  return v;
}

Verdict quadratic_sign_verdict(const CurveScenario& s, const SeshadriEstimate& e, LambdaRange range) {
  const Polynomial f = destabilizing_quadratic(s);
  const std::string rule = "sign of f = " + f.to_string("lambda") + " on " + range_text(range);
  if (e.is_exact()) return verdict_from_scan(scan_quadratic(f, e.lower(), range), rule);

  const Verdict at_upper = verdict_from_scan(scan_quadratic(f, e.upper(), range), rule);
  if (at_upper.status == Status::Stable) return at_upper;
  const Verdict at_lower = verdict_from_scan(scan_quadratic(f, e.lower(), range), rule);
  if (at_lower.status == Status::StrictlyDestabilized) return at_lower;

  Verdict v;
  v.rule = rule;
  v.status = Status::ConditionalOnSeshadri;
  v.condition = "verdict depends on eps in " + e.to_string() + "; at the upper end it is " +
                std::string(to_string(at_upper.status));
  if (at_lower.status == Status::SemistableNotStable) v.condition->append("; not stable on the whole range");
  return v;
}

Verdict classify_curve(const CurveScenario& s, const SeshadriEstimate& e, const ClassifyFlags& flags,
                       LambdaRange range) {
  if (!s.anticanonical) throw Error(ErrorKind::NotAnticanonical, "classification rules assume L = -K_X");
  s.validate();
  require_consistent_epsilon(s, e.lower());
  validate_flags(s, flags);
  const std::string echo = flag_echo(flags);
  auto stable = [&](std::string rule) {
    Verdict v;
    v.rule = std::move(rule) + echo;
    return v;
  };

  if (s.genus >= 1) return stable("non-rational curve: not stable would force Z to be Fano");
  if (e.upper() && *e.upper() <= Surd(Rational(s.codimension()))) {
    return stable("eps <= codimension r = " + std::to_string(s.codimension()) +
                  ": -mu a~_0 + a~_1 + a~_0'/2 = (r-x)(...)E/(2(n-1)!) > 0");
  }
  if (flags.normal_bundle && !admissible_normal_bundle(s.n, *flags.normal_bundle)) {
    return stable("normal bundle " + flags.normal_bundle->to_string() + " is not O(a)^{n-1} or O(a)^{n-2}+O(a+1)");
  }
  const bool projective_line = flags.is_projective_space && s.degree == s.n + 1;
  if (flags.picard_rank_one && s.n >= 3 && !projective_line) {
    return stable("Picard number 1, not a line in P^n: stable for every smooth curve");
  }
  if (flags.fano_index && *flags.fano_index >= 3 && *flags.fano_index <= s.n && s.n >= 4) {
    return stable("Fano index in [3, n], n >= 4: stable for every smooth curve");
  }
  if (flags.fano_index && *flags.fano_index == 3 && s.n == 3) {
    return stable("quadric threefold (index 3): stable for every smooth curve");
  }

  Verdict v = degree_regime_verdict(s, e, range);
  v.rule += echo;
  if (v.status != Status::Stable && v.status != Status::ConditionalOnSeshadri && flags.normal_bundle &&
      !theorem_bc_shape_filter(s.n, *flags.normal_bundle, projective_line).passes) {
    throw Error(ErrorKind::ScenarioInconsistent,
                "verdict " + std::string(to_string(v.status)) + " needs normal bundle trivial" +
                    std::string(s.n == 3 ? ", O+O(-1)" : "") + " or a line in P^n; got " +
                    flags.normal_bundle->to_string());
  }
  return v;
}

}  // namespace slopestab
