#include "tornheim/alpha_calculus.hpp"

#include <cmath>
#include <numbers>

#include "tornheim/bernoulli.hpp"
#include "tornheim/errors.hpp"

namespace tornheim {

namespace {

ClosedForm reduce(const Polynomial& p, int s, int r) {
  if (p.degree() <= 0) return {};

  if (r == 0 && s == 0) {
    // zeta(0, a) = 1/2 - a
    return ClosedForm::rational((p * hurwitz_neg_int_poly(0)).integrate_unit());
  }

  const Rational c(1, 1 - s);
  const Rational jump = p(Rational(1)) - p(Rational(0));
  const Rational zeta_below = zeta_neg_int(static_cast<unsigned>(1 - s));  // zeta(s-1)
  const Polynomial dp = p.derivative();

  if (r == 0) {
    return ClosedForm::rational(jump * zeta_below * c) - reduce(dp, s - 1, 0) * c;
  }
  ClosedForm boundary;
  if (!jump.is_zero()) {
    boundary = ClosedForm::rational(jump * zeta_below * c * c) + ClosedForm::zeta_prime(jump * c, 0, s - 1);
  }
  return boundary - reduce(dp, s - 1, 0) * (c * c) - reduce(dp, s - 1, 1) * c;
}

}  // namespace

ClosedForm integrate_poly_zeta(const PolyZetaIntegrand& g) {
  if (g.s0 > 0) throw DomainError("integrate_poly_zeta requires s0 <= 0");
  if (g.r != 0 && g.r != 1) throw DomainError("integrate_poly_zeta supports r in {0, 1}");
  return reduce(g.poly, g.s0, g.r);
}

ClosedForm integrate_zeta_product(int n1, int n2, int n3, int r) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw DomainError("integrate_zeta_product requires n_i >= 1");
  const Polynomial p = hurwitz_neg_int_poly(static_cast<unsigned>(n1 - 1)) *
                       hurwitz_neg_int_poly(static_cast<unsigned>(n2 - 1));
  return integrate_poly_zeta({p, 1 - n3, r});
}

Complex closedform_eval(const ClosedForm& c) {
  Complex total = 0.0;
  for (const auto& t : c.terms()) {
    Complex term = t.coeff.to_double() * std::pow(std::numbers::pi, t.pi_power);
    if (t.zeta_prime_arg) {
      const int m = *t.zeta_prime_arg;
      term *= (m < 0 && m % 2 == 0) ? zeta_prime_neg_even(1 - m) : riemann_zeta(Complex(m, 0.0), 1);
    }
    total += term;
  }
  return total;
}

}  // namespace tornheim
