#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "slopestab/rational.hpp"
#include "slopestab/surd.hpp"

namespace slopestab {

/// Dense univariate polynomial over Q. coefficients()[i] multiplies x^i; the
/// zero polynomial has no coefficients and the leading coefficient is never 0.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);

  std::span<const Rational> coefficients() const { return coefficients_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coefficient(std::size_t i) const;
  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  Rational operator()(const Rational& x) const;
  Surd operator()(const Surd& x) const;

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable, highest degree first: "-3*x^2 + 24".
  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Antiderivative Q with Q(0) = 0.
Polynomial integrate_from_zero(const Polynomial& p);

inline Rational poly_eval(const Polynomial& p, const Rational& v) { return p(v); }
inline Surd poly_eval(const Polynomial& p, const Surd& v) { return p(v); }

}  // namespace slopestab
