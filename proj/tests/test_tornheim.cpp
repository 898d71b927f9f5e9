#include <doctest.h>

#include <cmath>

#include "tornheim/alpha_calculus.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/tornheim_eval.hpp"

using namespace tornheim;

namespace {

constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kZeta5 = 1.0369277551433699263;

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

Complex T(Complex a, Complex b, Complex c) { return tornheim_numeric({a, b, c}); }

}  // namespace

TEST_SUITE("tornheim") {
  TEST_CASE("known values") {
    CHECK(close(T(1.0, 1.0, 1.0), 2.0 * kZeta3, 1e-10));
    CHECK(close(T(2.0, 2.0, 2.0), std::pow(M_PI, 6) / 2835.0, 1e-10));
    CHECK(close(T(0.0, 1.0, 2.0), kZeta3, 1e-10));
    CHECK(close(T(2.0, 3.0, 4.0), 0.0680754623769222, 1e-12));
    // T(s1, s2, 0) = zeta(s1) zeta(s2), reference from mpmath
    CHECK(close(T({2.5, 0.5}, {3.0, -1.0}, 0.0), {1.43839905881606424978, -0.00060062112505384968}, 1e-10));
  }

  TEST_CASE("symmetry in the first two arguments") {
    const Complex a(2.3, 0.4);
    const Complex b(1.7, -0.9);
    const Complex c(1.4, 0.2);
    CHECK(close(T(a, b, c), T(b, a, c), 1e-10));
  }

  TEST_CASE("partial fraction recurrence") {
    const Complex a(2.3, 0.4);
    const Complex b(2.1, -0.3);
    const Complex c(1.6, 0.5);
    CHECK(close(T(a, b, c), T(a - 1.0, b, c + 1.0) + T(a, b - 1.0, c + 1.0), 1e-9));
  }

  TEST_CASE("double zeta") {
    CHECK(close(double_zeta(1.0, 2.0), kZeta3, 1e-11));
    CHECK(close(double_zeta(2.0, 3.0), 0.228810397603353759769, 1e-11));
    CHECK(close(double_zeta({1.5, 0.3}, 2.7), {0.340579685359765040865, -0.020075120273072104698}, 1e-10));
    CHECK(close(double_zeta(2.0, 3.0), T(0.0, 2.0, 3.0), 1e-10));
    // stuffle: zeta(a) zeta(b) = zeta_2(a,b) + zeta_2(b,a) + zeta(a+b)
    const Complex a(2.2, 0.7);
    const Complex b(3.1, -0.4);
    CHECK(close(riemann_zeta(a) * riemann_zeta(b), double_zeta(a, b) + double_zeta(b, a) + riemann_zeta(a + b), 1e-9));
  }

  TEST_CASE("domain and convergence errors") {
    CHECK_FALSE(TornheimArgs{0.5, 0.5, 0.5}.in_convergence_region());
    CHECK(TornheimArgs{1.0, 1.0, 1.0}.in_convergence_region());
    CHECK_THROWS_AS(T(0.5, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(double_zeta(2.0, 1.0), DomainError);
    SummationSettings tight;
    tight.cutoff = 4;
    tight.max_cutoff = 8;
    tight.tail_terms = 1;
    tight.target_tol = 1e-15;
    CHECK_THROWS_AS(tornheim_numeric({1.05, 0.0, 1.05}, tight), ConvergenceError);
  }

  TEST_CASE("reduction to T(i, 0, N-i)") {
    const auto r = hwz_reduce(1, 1, 1);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == HwzTerm{Rational(2), {1, 0, 2}});
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 0; c <= 3; ++c) {
          if (!TornheimArgs{Complex(a), Complex(b), Complex(c)}.in_convergence_region()) continue;
          Complex sum = 0.0;
          for (const auto& t : hwz_reduce(a, b, c)) {
            CHECK(t.args[1] == 0);
            CHECK(t.args[0] + t.args[2] == a + b + c);
            sum += t.coeff.to_double() * T(t.args[0], 0.0, t.args[2]);
          }
          CHECK(close(sum, T(a, b, c), 1e-9));
        }
      }
    }
  }

  TEST_CASE("diagonal closed forms") {
    CHECK(diagonal_even_closed(1) == ClosedForm::pi_power(Rational(1, 2835), 6));
    CHECK(diagonal_odd_closed(0) == ClosedForm::zeta_prime(Rational(-8), 2, -2));
    CHECK(close(closedform_eval(diagonal_even_closed(2)), T(4.0, 4.0, 4.0), 1e-10));
    CHECK(close(closedform_eval(diagonal_odd_closed(1)), T(3.0, 3.0, 3.0), 1e-10));
    CHECK_THROWS_AS(diagonal_even_closed(0), DomainError);
  }

  TEST_CASE("double zeta closed forms") {
    // 3 zeta(2) zeta(3) - (11/2) zeta(5)
    const ClosedForm expected =
        Rational(3) * (zeta_closed(2) * zeta_closed(3)) - Rational(11, 2) * zeta_closed(5);
    CHECK(double_zeta_odd_closed(2, 3) == expected);
    CHECK(close(closedform_eval(expected), 3.0 * M_PI * M_PI / 6.0 * kZeta3 - 5.5 * kZeta5, 1e-14));
    for (auto [n1, n2] : {std::pair{3, 2}, {2, 5}, {4, 3}, {3, 4}, {5, 2}}) {
      CHECK(close(closedform_eval(double_zeta_odd_closed(n1, n2)), double_zeta(n1, n2), 1e-10));
    }
    for (int n = 2; n <= 6; n += 2) {
      CHECK(close(closedform_eval(double_zeta_closed(1, n)), double_zeta(1.0, Complex(n)), 1e-10));
    }
    CHECK_THROWS_AS(double_zeta_odd_closed(2, 2), DomainError);
  }

  TEST_CASE("alternating combinations") {
    for (auto [a, b, c] : {std::tuple{1, 1, 1}, {1, 1, 3}, {2, 2, 1}, {1, 2, 2}, {3, 1, 3}}) {
      CHECK(close(closedform_eval(alternating_combo_odd(a, b, c)), alternating_combo_numeric(a, b, c), 1e-10));
    }
  }

  TEST_CASE("tornheim_closed coverage") {
    CHECK(tornheim_closed(1, 1, 1) == diagonal_odd_closed(0));
    CHECK(tornheim_closed(2, 2, 2) == diagonal_even_closed(1));
    CHECK(tornheim_closed(2, 2, 0) == zeta_closed(2) * zeta_closed(2));
    for (auto [a, b, c] : {std::tuple{1, 2, 2}, {2, 0, 3}, {0, 2, 3}, {3, 1, 1}, {2, 4, 0}}) {
      const auto cf = tornheim_closed(a, b, c);
      REQUIRE(cf.has_value());
      CHECK(close(closedform_eval(*cf), T(a, b, c), 1e-10));
    }
    CHECK(tornheim_closed(3, 3, 3).has_value());
    CHECK_FALSE(tornheim_closed(1, 1, 2).has_value());
  }
}
