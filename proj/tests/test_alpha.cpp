#include <doctest.h>

#include <cmath>

#include "tornheim/alpha_calculus.hpp"
#include "tornheim/bernoulli.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/quadrature.hpp"

using namespace tornheim;

namespace {

Complex numeric_poly_zeta(const Polynomial& p, int s0, int r) {
  return integrate_01([&](double a) { return p(a) * hurwitz_zeta(Complex(s0), a, r); }).value;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("elementary integrals") {
    CHECK(std::abs(integrate_01([](double) { return Complex(1.0); }).value - 1.0) < 1e-14);
    CHECK(std::abs(integrate_01([](double a) { return Complex(0.5 - a); }).value) < 1e-14);
    CHECK(std::abs(integrate_01([](double a) { return Complex((a - 0.5) * (a - 0.5)); }).value - 1.0 / 12.0) < 1e-14);
    // endpoint singularities
    CHECK(std::abs(integrate_01([](double a) { return Complex(std::log(a)); }).value + 1.0) < 1e-11);
    CHECK(std::abs(integrate_01([](double a) { return Complex(std::log(a) * std::log(1.0 - a)); }).value -
                   (2.0 - M_PI * M_PI / 6.0)) < 1e-10);
  }

  TEST_CASE("convergence failure is reported") {
    QuadSettings q;
    q.max_depth = 0;
    q.target_tol = 1e-15;
    CHECK_THROWS_AS(integrate_01([](double a) { return Complex(std::sin(200.0 * a)); }, q), ConvergenceError);
  }

  TEST_CASE("zeta products") {
    const IntegrandSpec two_zero{{{Complex(0.0), 0, false}, {Complex(0.0), 0, false}}};
    CHECK(std::abs(alpha_product_integral(two_zero).value - 1.0 / 12.0) < 1e-12);
    // zeta(0, 1-a) = -zeta(0, a)
    const IntegrandSpec mixed{{{Complex(0.0), 0, false}, {Complex(0.0), 0, true}}};
    CHECK(std::abs(alpha_product_integral(mixed).value + 1.0 / 12.0) < 1e-12);
    CHECK_THROWS_AS(alpha_product_integral({{{Complex(1.5), 0, false}}}), DomainError);
    CHECK_THROWS_AS(alpha_product_integral({{{Complex(-1.0), 2, false}}}), DomainError);
  }

  TEST_CASE("single factor integrates to zero") {
    for (int r : {0, 1}) {
      for (double s : {-0.5, -1.5, -2.5}) {
        CHECK(std::abs(alpha_product_integral({{{Complex(s), r, false}}}).value) < 1e-8);
      }
    }
    CHECK(std::abs(alpha_product_integral({{{Complex(0.0), 1, false}}}).value) < 1e-8);
  }
}

TEST_SUITE("alpha_calculus") {
  TEST_CASE("integral of a constant times zeta vanishes") {
    for (int s0 : {0, -1, -2, -3}) {
      for (int r : {0, 1}) CHECK(integrate_poly_zeta({Polynomial::constant(Rational(3)), s0, r}).is_zero());
    }
  }

  TEST_CASE("exact reduction matches quadrature") {
    const Polynomial polys[] = {Polynomial{Rational(0), Rational(1)}, bernoulli_polynomial(2),
                                Polynomial{Rational(1, 3), Rational(0), Rational(-2), Rational(5)},
                                bernoulli_polynomial(4) * bernoulli_polynomial(1)};
    for (const auto& p : polys) {
      for (int s0 : {0, -1, -2}) {
        for (int r : {0, 1}) {
          CAPTURE(p.to_string());
          CAPTURE(s0);
          CAPTURE(r);
          const Complex exact = closedform_eval(integrate_poly_zeta({p, s0, r}));
          CHECK(std::abs(exact - numeric_poly_zeta(p, s0, r)) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("products of three zeta factors") {
    CHECK(integrate_zeta_product(1, 1, 1, 1) == ClosedForm::zeta_prime(Rational(-1), 0, -2));
    for (int n1 = 1; n1 <= 3; ++n1) {
      for (int n2 = 1; n2 <= 3; ++n2) {
        for (int n3 = 1; n3 <= 3; ++n3) {
          for (int r : {0, 1}) {
            const IntegrandSpec spec{{{Complex(1 - n1), 0, false}, {Complex(1 - n2), 0, false},
                                      {Complex(1 - n3), r, false}}};
            const Complex q = alpha_product_integral(spec).value;
            CHECK(std::abs(closedform_eval(integrate_zeta_product(n1, n2, n3, r)) - q) < 1e-10);
          }
          CHECK(integrate_zeta_product(n1, n2, n3, 0) ==
                ClosedForm::rational(triple_bernoulli_integral(n1, n2, n3)));
        }
      }
    }
  }

  TEST_CASE("domain checks") {
    CHECK_THROWS_AS(integrate_poly_zeta({Polynomial::constant(Rational(1)), 1, 0}), DomainError);
    CHECK_THROWS_AS(integrate_poly_zeta({Polynomial::constant(Rational(1)), 0, 2}), DomainError);
  }

  TEST_CASE("closed form evaluation") {
    CHECK(std::abs(closedform_eval(ClosedForm::zeta_prime(Rational(-4), 2, -2)) - 1.2020569031595942854) < 1e-14);
    CHECK(std::abs(closedform_eval(ClosedForm::pi_power(Rational(1, 2835), 6)) - std::pow(M_PI, 6) / 2835.0) < 1e-15);
  }
}
