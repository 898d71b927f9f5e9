#include <doctest.h>

#include <cmath>

#include "tornheim/errors.hpp"
#include "tornheim/special.hpp"

using namespace tornheim;

namespace {

// reference values computed with mpmath at 30 digits
struct HurwitzRef {
  Complex s;
  double alpha;
  Complex value;
  Complex deriv;
};

const HurwitzRef kHurwitz[] = {
    {{-1.5, 0.0}, 0.3, {-0.0081855604858359760572, 0.0}, {0.030041790172639776602, 0.0}},
    {{-2.3, 1.7}, 0.71, {-0.020859375275523116915, 0.046390888627286772776},
     {0.034991083052440817451, 0.049789862850571630155}},
    {{0.4, 1.7}, 0.71, {0.54131155506007218334, 0.097495803935513709632},
     {0.56509214726419982723, 0.044322745964902764587}},
    {{2.5, -1.0}, 0.25, {6.513629823836207723, -31.115049461116408894},
     {7.9848224293269627673, -43.891261282937845969}},
    {{-0.5, 0.0}, 0.9, {-0.13822252417608230907, 0.0}, {-0.30587853702983490782, 0.0}},
};

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("special") {
  TEST_CASE("gamma and digamma") {
    CHECK(close(gamma(Complex(5.0)), 24.0, 1e-13));
    CHECK(close(gamma(Complex(0.5)), std::sqrt(M_PI), 1e-13));
    CHECK(close(gamma({1.3, 2.1}), {0.14154676352271739538, 0.09339208992910118072}, 1e-12));
    CHECK(close(gamma({-2.7, 0.4}), {-0.42601364816873742892, 0.036482419059879668823}, 1e-12));
    CHECK(close(digamma(Complex(1.0)), -0.57721566490153286061, 1e-13));
    CHECK(close(digamma({0.3, 1.2}), {0.16386102320889777936, 1.747728280754257949}, 1e-12));
    CHECK(close(digamma(Complex(-1.6)), -0.26971787791845040666, 1e-12));
  }

  TEST_CASE("hurwitz zeta against reference values") {
    for (const auto& r : kHurwitz) {
      CAPTURE(r.s);
      CAPTURE(r.alpha);
      CHECK(close(hurwitz_zeta(r.s, r.alpha, 0), r.value, 1e-11));
      CHECK(close(hurwitz_zeta(r.s, r.alpha, 1), r.deriv, 1e-11));
    }
  }

  TEST_CASE("hurwitz zeta at nonpositive integers and small alpha") {
    // zeta(-n, a) = -B_{n+1}(a)/(n+1)
    CHECK(close(hurwitz_zeta(Complex(0.0), 0.25, 0), 0.25, 1e-14));
    CHECK(close(hurwitz_zeta(Complex(-3.0), 1e-9, 0), 1.0 / 120.0, 1e-10));
    CHECK(close(hurwitz_zeta(Complex(-5.0), 1e-9, 0), -1.0 / 252.0, 1e-10));
  }

  TEST_CASE("riemann zeta and derivative") {
    CHECK(close(riemann_zeta(Complex(2.0)), M_PI * M_PI / 6.0, 1e-14));
    CHECK(close(riemann_zeta(Complex(3.0), 1), -0.19812624288563685333, 1e-12));
    CHECK(close(riemann_zeta(Complex(-2.0), 1), -0.03044845705839327078025153, 1e-12));
    CHECK(close(riemann_zeta(Complex(-4.0), 1), 0.007983811450268624280696671, 1e-12));
    CHECK(close(riemann_zeta(Complex(-1.0), 1), -0.1654211437004509292139197, 1e-12));
    CHECK(close(riemann_zeta({-3.0, 1.0}, 1), {0.019944302192413973405, -0.010049418300176551801}, 1e-11));
    CHECK(close(zeta_prime_neg_even(3), -0.03044845705839327078025153, 1e-14));
    CHECK(close(zeta_prime_neg_even(5), 0.007983811450268624280696671, 1e-14));
    CHECK_THROWS_AS(riemann_zeta(Complex(1.0)), PoleError);
  }

  TEST_CASE("fourier evaluators agree with euler-maclaurin") {
    for (Complex s : {Complex(-0.5, 0.0), Complex(-1.5, 0.7), Complex(0.3, -1.1), Complex(-2.5, 0.0)}) {
      for (double a : {0.1, 0.37, 0.5, 0.83}) {
        CAPTURE(s);
        CAPTURE(a);
        CHECK(close(hurwitz_fourier(s, a, 0), hurwitz_zeta(s, a, 0), 1e-9));
        CHECK(close(hurwitz_fourier(s, a, 1), hurwitz_zeta(s, a, 1), 1e-9));
        CHECK(close(hurwitz_fourier_sin_form(s, a), hurwitz_zeta(s, a, 0), 1e-9));
      }
    }
  }

  TEST_CASE("derivative in alpha") {
    const double h = 1e-5;
    for (Complex s : {Complex(-1.5, 0.0), Complex(2.5, 0.5), Complex(-0.3, 1.2)}) {
      for (double a : {0.3, 0.8, 1.7}) {
        const Complex fd = (hurwitz_zeta(s, a + h) - hurwitz_zeta(s, a - h)) / (2.0 * h);
        CHECK(close(fd, -s * hurwitz_zeta(s + 1.0, a), 1e-6));
      }
    }
  }

  TEST_CASE("even zeta closed form") {
    CHECK(zeta_even_closed(2) == ClosedForm::pi_power(Rational(1, 6), 2));
    CHECK(zeta_even_closed(6) == ClosedForm::pi_power(Rational(1, 945), 6));
  }
}
