#pragma once

// Exact symbolic values of the form
//
//   sum_k  c_k * pi^{p_k} * [1 or zeta'(m_k)]
//
// with rational c_k, nonnegative p_k and nonpositive integers m_k.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tornheim/rational.hpp"

namespace tornheim {

struct ClosedFormTerm {
  Rational coeff;
  int pi_power = 0;
  std::optional<int> zeta_prime_arg;

  friend bool operator==(const ClosedFormTerm&, const ClosedFormTerm&) = default;
};

/// Canonical: terms sorted by (pi_power, zeta_prime_arg) with the plain
/// pi-power term first, no zero coefficients, no repeated keys.
class ClosedForm {
 public:
  ClosedForm() = default;
  explicit ClosedForm(std::vector<ClosedFormTerm> terms);

  static ClosedForm rational(const Rational& c);
  static ClosedForm pi_power(const Rational& c, int power);
  static ClosedForm zeta_prime(const Rational& c, int pi_power, int arg);

  const std::vector<ClosedFormTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_zeta_prime() const;
  /// True when the value is a bare rational (only a pi^0 term, or zero).
  bool is_rational() const;
  /// The pi^0 coefficient.
  Rational rational_part() const;

  ClosedForm operator-() const;
  ClosedForm& operator+=(const ClosedForm& rhs);
  ClosedForm& operator-=(const ClosedForm& rhs);
  ClosedForm& operator*=(const Rational& c);
  /// Multiplies every term by pi^k.
  ClosedForm times_pi(int k) const;

  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
  friend ClosedForm operator*(ClosedForm a, const Rational& c) { return a *= c; }
  friend ClosedForm operator*(const Rational& c, ClosedForm a) { return a *= c; }
  /// Product of two closed forms. Throws std::logic_error when both factors
  /// carry zeta' terms, since products of zeta' values leave the basis.
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  /// e.g. "(1/2835)*pi^6 + (3/4)*pi^2*zeta'(-2)"; "0" when empty.
  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<ClosedFormTerm> terms_;
};

/// [{coeff: "p/q", pi_power: k, zeta_prime_arg: m | null}, ...]
nlohmann::json to_json(const ClosedForm& c);
ClosedForm closed_form_from_json(const nlohmann::json& j);

/// zeta(n) for n >= 2 in the canonical basis: rational * pi^n for even n,
/// rational * pi^{n-1} * zeta'(1-n) for odd n.
ClosedForm zeta_closed(int n);

}  // namespace tornheim
