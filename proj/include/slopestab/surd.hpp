#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "slopestab/rational.hpp"

namespace slopestab {

/// Exact real number rational_part + coefficient * sqrt(radicand).
///
/// The radicand is kept square-free (sqrt(8) is stored as 2*sqrt(2)) and is
/// reset to 0 whenever the coefficient vanishes, so a rational value has a
/// single representation. Arithmetic between two surds is only defined when
/// their radicands agree or one side is rational.
class Surd {
 public:
  Surd() = default;
  Surd(Rational rational_part);  // NOLINT(google-explicit-constructor)
  Surd(std::int64_t value) : Surd(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Surd(Rational rational_part, Rational coefficient, mpz_class radicand);

  /// sqrt(r) for a non-negative rational r.
  static Surd sqrt(const Rational& r);

  const Rational& rational_part() const { return rational_; }
  const Rational& coefficient() const { return coefficient_; }
  const mpz_class& radicand() const { return radicand_; }

  bool is_rational() const { return coefficient_.is_zero(); }
  /// Only valid when is_rational().
  const Rational& as_rational() const;

  int sign() const;
  Surd conjugate() const;

  Surd& operator+=(const Surd& other);
  Surd& operator-=(const Surd& other);
  Surd& operator*=(const Surd& other);
  Surd& operator/=(const Rational& other);

  friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
  friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
  friend Surd operator*(Surd lhs, const Surd& rhs) { return lhs *= rhs; }
  friend Surd operator/(Surd lhs, const Rational& rhs) { return lhs /= rhs; }
  Surd operator-() const;

  friend bool operator==(const Surd& lhs, const Surd& rhs) {
    return lhs.rational_ == rhs.rational_ && lhs.coefficient_ == rhs.coefficient_ &&
           lhs.radicand_ == rhs.radicand_;
  }
  /// Throws IncomparableRadicands for two irrational values over different radicands.
  friend std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs);

  /// "3", "2*sqrt(2)", "1/2 - 3*sqrt(5)".
  std::string to_string() const;
  std::string to_decimal(int places = 6) const;

 private:
  void normalize();

  Rational rational_;
  Rational coefficient_;
  mpz_class radicand_{0};
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

/// Total order between surds, see operator<=>.
std::strong_ordering surd_compare(const Surd& s, const Surd& t);

Surd min(const Surd& a, const Surd& b);
Surd max(const Surd& a, const Surd& b);

/// Real roots of a*x^2 + b*x + c in increasing order. a == 0 is solved as a
/// linear equation; a == b == 0 with c != 0 has no roots.
std::vector<Surd> quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

}  // namespace slopestab
