#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tornheim/bernoulli.hpp"
#include "tornheim/closed_form.hpp"
#include "tornheim/polynomial.hpp"
#include "tornheim/rational.hpp"

using namespace tornheim;

TEST_SUITE("exact") {
  TEST_CASE("rational arithmetic and text") {
    const Rational a(1, 6);
    const Rational b(-3, 4);
    CHECK((a + b) == Rational(-7, 12));
    CHECK((a * b) == Rational(-1, 8));
    CHECK((a / b) == Rational(-2, 9));
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::parse(Rational(22, 7).to_string()) == Rational(22, 7));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(factorial(10) == Rational(3628800));
    CHECK(binomial(10, 3) == Rational(120));
    CHECK(binomial(3, 5) == Rational(0));
  }

  TEST_CASE("bernoulli numbers against the standard table") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(6) == Rational(1, 42));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bernoulli_number(20) == Rational(-174611, 330));
    for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli_number(n).is_zero());
  }

  TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_polynomial(0).to_string() == "1");
    CHECK(bernoulli_polynomial(1) == Polynomial{Rational(-1, 2), Rational(1)});
    CHECK(bernoulli_polynomial(2) == Polynomial{Rational(1, 6), Rational(-1), Rational(1)});
    CHECK(bernoulli_polynomial(3) == Polynomial{Rational(0), Rational(1, 2), Rational(-3, 2), Rational(1)});
    for (unsigned n = 0; n <= 24; ++n) {
      const Polynomial p = bernoulli_polynomial(n);
      CHECK(p.reflected() == (n % 2 == 0 ? p : -p));
      CHECK(p(Rational(0)) == bernoulli_number(n));
      if (n >= 1) CHECK(p.integrate_unit().is_zero());
      if (n >= 1) CHECK(p.derivative() == Rational(n) * bernoulli_polynomial(n - 1));
    }
  }

  TEST_CASE("zeta at nonpositive integers") {
    CHECK(zeta_neg_int(0) == Rational(-1, 2));
    CHECK(zeta_neg_int(1) == Rational(-1, 12));
    CHECK(zeta_neg_int(3) == Rational(1, 120));
    CHECK(zeta_neg_int(2).is_zero());
    // zeta(0, a) = 1/2 - a
    CHECK(hurwitz_neg_int_poly(0) == Polynomial{Rational(1, 2), Rational(-1)});
  }

  TEST_CASE("triple integral: sum formula equals polynomial product") {
    for (unsigned a = 1; a <= 5; ++a) {
      for (unsigned b = 1; b <= 5; ++b) {
        for (unsigned c = 1; c <= 5; ++c) {
          CHECK(triple_bernoulli_integral(a, b, c) == triple_integral_by_polynomials(a, b, c));
          if ((a + b + c) % 2 == 1) CHECK(triple_bernoulli_integral(a, b, c).is_zero());
        }
      }
    }
    // int (1/2 - a)^3 = 0, int (1/2 - a)^2 * (-(a^2 - a + 1/6)/2)
    CHECK(triple_bernoulli_integral(1, 1, 1) == Rational(0));
    CHECK(triple_bernoulli_integral(1, 1, 2) == Rational(-1, 360));
    CHECK(triple_bernoulli_integral(2, 2, 2) == Rational(-1, 30240));
  }

  TEST_CASE("closed form canonicalization and algebra") {
    ClosedForm a = ClosedForm::zeta_prime(Rational(3), 2, -2) + ClosedForm::pi_power(Rational(1, 2), 4);
    ClosedForm b = ClosedForm::pi_power(Rational(1, 2), 4) + ClosedForm::zeta_prime(Rational(3), 2, -2);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK((a - b).to_string() == "0");
    CHECK(ClosedForm::pi_power(Rational(1, 2835), 6).to_string() == "(1/2835)*pi^6");
    CHECK(ClosedForm::zeta_prime(Rational(-8), 2, -2).to_string() == "(-8)*pi^2*zeta'(-2)");
    CHECK(ClosedForm::rational(Rational(1, 12)).is_rational());
    CHECK(a.times_pi(2) == ClosedForm::zeta_prime(Rational(3), 4, -2) + ClosedForm::pi_power(Rational(1, 2), 6));
    CHECK_THROWS_AS(ClosedForm::zeta_prime(1, 0, -2) * ClosedForm::zeta_prime(1, 0, -4), std::logic_error);
  }

  TEST_CASE("closed form json round trip") {
    const ClosedForm c = ClosedForm::zeta_prime(Rational(-22, 3), 4, -4) + ClosedForm::zeta_prime(Rational(-2), 4, -2) +
                         ClosedForm::pi_power(Rational(7, 5), 0);
    const nlohmann::json j = to_json(c);
    REQUIRE(j.is_array());
    CHECK(j.size() == 3);
    CHECK(j[0].at("coeff") == "7/5");
    CHECK(j[0].at("zeta_prime_arg").is_null());
    CHECK(closed_form_from_json(nlohmann::json::parse(j.dump())) == c);
  }

  TEST_CASE("zeta closed forms") {
    CHECK(zeta_closed(2) == ClosedForm::pi_power(Rational(1, 6), 2));
    CHECK(zeta_closed(4) == ClosedForm::pi_power(Rational(1, 90), 4));
    // zeta(3) = -4 pi^2 zeta'(-2), zeta(5) = (4/3) pi^4 zeta'(-4)
    CHECK(zeta_closed(3) == ClosedForm::zeta_prime(Rational(-4), 2, -2));
    CHECK(zeta_closed(5) == ClosedForm::zeta_prime(Rational(4, 3), 4, -4));
  }
}
