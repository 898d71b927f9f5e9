#pragma once

// Polynomials in one variable (alpha) with exact rational coefficients.

#include <initializer_list>
#include <string>
#include <vector>

#include "tornheim/rational.hpp"

namespace tornheim {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The monomial alpha^n.
  static Polynomial monomial(unsigned n, const Rational& c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of alpha^i (zero past the degree).
  Rational coefficient(unsigned i) const;

  Rational operator()(const Rational& alpha) const;
  double operator()(double alpha) const;

  Polynomial derivative() const;
  /// Exact integral over [0, 1].
  Rational integrate_unit() const;
  /// p(1 - alpha).
  Polynomial reflected() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Human-readable form, e.g. "a^2 - a + 1/6".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace tornheim
