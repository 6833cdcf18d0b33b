#include "slopestab/surd.hpp"

#include <ostream>
#include <utility>

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

// Trial division bound for square-factor extraction. Radicands here are tiny
// (n^2 - 1 and discriminants of small quadratics); larger ones stay unreduced,
// which is still exact but may make comparisons report incomparable radicands.
constexpr unsigned long kSquareFactorLimit = 1'000'000;

// Splits r = outside^2 * inside with inside square-free (up to the limit).
std::pair<mpz_class, mpz_class> extract_square(mpz_class r) {
  mpz_class outside = 1;
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
    return {root, 1};
  }
  for (unsigned long p = 2; p <= kSquareFactorLimit; ++p) {
    const mpz_class sq = mpz_class(p) * p;
    if (sq > r) break;
    while (mpz_divisible_p(r.get_mpz_t(), sq.get_mpz_t())) {
      r /= sq;
      outside *= p;
    }
  }
  return {outside, r};
}

void require_compatible(const Surd& a, const Surd& b) {
  if (!a.is_rational() && !b.is_rational() && a.radicand() != b.radicand()) {
    throw Error(ErrorKind::IncomparableRadicands,
                "sqrt(" + a.radicand().get_str() + ") vs sqrt(" + b.radicand().get_str() + ")");
  }
}

}  // namespace

Surd::Surd(Rational rational_part) : rational_(std::move(rational_part)) {}

Surd::Surd(Rational rational_part, Rational coefficient, mpz_class radicand)
    : rational_(std::move(rational_part)),
      coefficient_(std::move(coefficient)),
      radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw Error(ErrorKind::NegativeRadicand, radicand_.get_str());
  normalize();
}

void Surd::normalize() {
  if (coefficient_.is_zero() || radicand_ == 0) {
    coefficient_ = 0;
    radicand_ = 0;
    return;
  }
  auto [outside, inside] = extract_square(radicand_);
  coefficient_ *= Rational(outside);
  if (inside == 1) {
    rational_ += coefficient_;
    coefficient_ = 0;
    radicand_ = 0;
  } else {
    radicand_ = inside;
  }
}

Surd Surd::sqrt(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::NegativeRadicand, r.to_string());
  // sqrt(P/Q) = sqrt(P*Q) / Q
  return Surd(0, Rational(mpz_class(1), r.denominator()), r.numerator() * r.denominator());
}

const Rational& Surd::as_rational() const {
  if (!is_rational()) throw Error(ErrorKind::IncomparableRadicands, "surd is irrational: " + to_string());
  return rational_;
}

int Surd::sign() const {
  const int sa = rational_.sign();
  const int sb = coefficient_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 * k
  const Rational lhs = rational_ * rational_;
  const Rational rhs = coefficient_ * coefficient_ * Rational(radicand_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

Surd Surd::conjugate() const {
  Surd out = *this;
  out.coefficient_ = -out.coefficient_;
  return out;
}

Surd& Surd::operator+=(const Surd& other) {
  require_compatible(*this, other);
  if (is_rational()) radicand_ = other.radicand_;
  rational_ += other.rational_;
  coefficient_ += other.coefficient_;
  normalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& other) { return *this += -other; }

Surd& Surd::operator*=(const Surd& other) {
  require_compatible(*this, other);
  const mpz_class k = is_rational() ? other.radicand_ : radicand_;
  const Rational a = rational_, b = coefficient_;
  rational_ = a * other.rational_ + b * other.coefficient_ * Rational(k);
  coefficient_ = a * other.coefficient_ + b * other.rational_;
  radicand_ = k;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Rational& other) {
  rational_ /= other;
  coefficient_ /= other;
  return *this;
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.rational_ = -out.rational_;
  out.coefficient_ = -out.coefficient_;
  return out;
}

std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs) {
  const int s = (lhs - rhs).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering surd_compare(const Surd& s, const Surd& t) { return s <=> t; }

Surd min(const Surd& a, const Surd& b) { return (b < a) ? b : a; }
Surd max(const Surd& a, const Surd& b) { return (a < b) ? b : a; }

std::string Surd::to_string() const {
  if (is_rational()) return rational_.to_string();
  const Rational mag = coefficient_.abs();
  std::string radical = (mag == 1 ? "" : mag.to_string() + "*") + "sqrt(" + radicand_.get_str() + ")";
  if (rational_.is_zero()) return (coefficient_.sign() < 0 ? "-" : "") + radical;
  return rational_.to_string() + (coefficient_.sign() < 0 ? " - " : " + ") + radical;
}

std::string Surd::to_decimal(int places) const {
  if (is_rational()) return rational_.to_decimal(places);
  // Truncate |b|*sqrt(k) at 10^-(places + 12); an irrational value never sits
  // on a rounding tie, so the extra digits settle the last printed one.
  mpz_class scale = 1;
  for (int i = 0; i < places + 12; ++i) scale *= 10;
  const Rational scaled_sq = coefficient_ * coefficient_ * Rational(radicand_) * Rational(mpz_class(scale * scale));
  mpz_class floor_sq = scaled_sq.numerator() / scaled_sq.denominator();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), floor_sq.get_mpz_t());
  Rational radical_part(root, scale);
  if (coefficient_.sign() < 0) radical_part = -radical_part;
  return (rational_ + radical_part).to_decimal(places);
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_string(); }

std::vector<Surd> quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    throw Error(ErrorKind::AllCoefficientsZero, "quadratic with all coefficients zero");
  }
  if (a.is_zero()) {
    if (b.is_zero()) return {};
    return {Surd(-c / b)};
  }
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return {};
  const Rational two_a = Rational(2) * a;
  const Surd centre(-b / two_a);
  if (disc.is_zero()) return {centre};
  const Surd offset = Surd::sqrt(disc) / two_a.abs();
  return {centre - offset, centre + offset};
}

}  // namespace slopestab
