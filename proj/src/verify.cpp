#include "tornheim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "tornheim/alpha_calculus.hpp"
#include "tornheim/bernoulli.hpp"
#include "tornheim/complex_io.hpp"
#include "tornheim/errors.hpp"

namespace tornheim {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Complex two_pi_pow(Complex e) { return std::exp(e * std::log(2.0 * kPi)); }

double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

json cjson(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

double number_or(const json& j, double fallback) { return j.is_null() ? fallback : j.get<double>(); }

Complex cparse(const json& j) { return {number_or(j.at("re"), kNaN), number_or(j.at("im"), kNaN)}; }

json args_json(const TornheimArgs& a) {
  return json{{"s1", format_complex(a.s1)}, {"s2", format_complex(a.s2)}, {"s3", format_complex(a.s3)}};
}

Complex T(const TornheimArgs& a, const VerifySettings& st) { return tornheim_numeric(a, st.summation); }

Complex T(Complex a, Complex b, Complex c, const VerifySettings& st) {
  return tornheim_numeric({a, b, c}, st.summation);
}

Complex quad(std::vector<ZetaFactor> factors, const VerifySettings& st) {
  return alpha_product_integral({std::move(factors)}, st.quad).value;
}

class Collector {
 public:
  Collector(std::string id, const VerifySettings& settings, std::vector<IdentityCase>& out)
      : id_(std::move(id)), settings_(settings), out_(out) {}

  template <class F>
  void numeric(json params, double tol, F&& f, std::string note = {}) {
    const double t = settings_.tol.value_or(tol);
    try {
      const auto [lhs, rhs] = f();
      out_.push_back(make_case(id_, std::move(params), lhs, rhs, t, std::move(note)));
    } catch (const std::exception& e) {
      out_.push_back({id_, std::move(params), {kNaN, kNaN}, {kNaN, kNaN}, kInf, kInf, t, false, e.what()});
    }
  }

  // Structural comparisons ignore any tolerance override.
  void exact(json params, bool equal, Complex lhs, Complex rhs, std::string note = {}) {
    IdentityCase c{id_, std::move(params), lhs, rhs, 0.0, 0.0, 0.0, equal, std::move(note)};
    if (!equal) {
      c.abs_err = std::max(std::abs(lhs - rhs), std::numeric_limits<double>::denorm_min());
      c.rel_err = kInf;
    }
    out_.push_back(std::move(c));
  }

  const VerifySettings& settings() const { return settings_; }

 private:
  std::string id_;
  const VerifySettings& settings_;
  std::vector<IdentityCase>& out_;
};

// 2 (2pi)^{-N} Gamma(s1) Gamma(s2) Gamma(s3)
Complex theorem_prefactor(const TornheimArgs& a) {
  return 2.0 * two_pi_pow(-(a.s1 + a.s2 + a.s3)) * gamma(a.s1) * gamma(a.s2) * gamma(a.s3);
}

Complex theorem_i_rhs(const TornheimArgs& a, const VerifySettings& st) {
  const Complex N = a.s1 + a.s2 + a.s3;
  const auto c = [&](Complex x) { return std::cos(0.5 * kPi * x); };
  return theorem_prefactor(a) * (c(N - 2.0 * a.s3) * T(a.s1, a.s2, a.s3, st) +
                                 c(N - 2.0 * a.s1) * T(a.s2, a.s3, a.s1, st) +
                                 c(N - 2.0 * a.s2) * T(a.s3, a.s1, a.s2, st));
}

Complex theorem_ii_rhs(const TornheimArgs& a, const VerifySettings& st) {
  const Complex N = a.s1 + a.s2 + a.s3;
  const auto c = [&](Complex x) { return std::cos(0.5 * kPi * x); };
  return theorem_prefactor(a) * (c(N) * T(a.s1, a.s2, a.s3, st) + c(N - 2.0 * a.s2) * T(a.s2, a.s3, a.s1, st) +
                                 c(N - 2.0 * a.s1) * T(a.s3, a.s1, a.s2, st));
}

std::vector<ZetaFactor> theorem_factors(const TornheimArgs& a, bool reflect_third) {
  return {{1.0 - a.s1, 0, false}, {1.0 - a.s2, 0, false}, {1.0 - a.s3, 0, reflect_third}};
}

bool is_integer_point(const TornheimArgs& a) {
  for (Complex s : {a.s1, a.s2, a.s3}) {
    if (s.imag() != 0.0 || s.real() != std::round(s.real()) || s.real() < 1.0) return false;
  }
  return true;
}

Complex exact_theorem_lhs(const TornheimArgs& a, bool reflect_third) {
  const auto n1 = static_cast<unsigned>(a.s1.real());
  const auto n2 = static_cast<unsigned>(a.s2.real());
  const auto n3 = static_cast<unsigned>(a.s3.real());
  // zeta(1-n, 1-x) = (-1)^n zeta(1-n, x)
  const double sign = reflect_third ? sign_pow(static_cast<int>(n3)) : 1.0;
  return sign * triple_bernoulli_integral(n1, n2, n3).to_double();
}

void theorem_cases(Collector& col, const std::vector<TornheimArgs>& points, bool second) {
  const auto& st = col.settings();
  for (const auto& a : points) {
    const bool integer = is_integer_point(a);
    col.numeric(args_json(a), integer ? 1e-8 : 1e-6, [&] {
      const Complex lhs = integer ? exact_theorem_lhs(a, second) : quad(theorem_factors(a, second), st);
      const Complex rhs = second ? theorem_ii_rhs(a, st) : theorem_i_rhs(a, st);
      return std::pair{lhs, rhs};
    });
  }
}

std::vector<TornheimArgs> theorem_fixed_points(bool second) {
  std::vector<TornheimArgs> p{{2.0, 2.0, 2.0}, {2.5, 2.5, 2.5}};
  if (second) {
    p.push_back({3.0, 2.0, 2.0});
  } else {
    p.push_back({Complex(2.0, 0.5), 2.5, Complex(3.0, -0.5)});
  }
  return p;
}

std::vector<std::pair<Complex, Complex>> random_pairs(std::uint64_t seed, int count, double lo, double hi,
                                                      double im) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(lo, hi);
  std::uniform_real_distribution<double> imd(-im, im);
  std::vector<std::pair<Complex, Complex>> out;
  for (int i = 0; i < count; ++i) {
    const double r1 = re(rng);
    const double i1 = imd(rng);
    const double r2 = re(rng);
    const double i2 = imd(rng);
    out.emplace_back(Complex(r1, i1), Complex(r2, i2));
  }
  return out;
}

json pair_json(Complex s1, Complex s2) { return json{{"s1", format_complex(s1)}, {"s2", format_complex(s2)}}; }

json triple_json(int a, int b, int c) { return json{{"n1", a}, {"n2", b}, {"n3", c}}; }

// --- individual batteries --------------------------------------------------

void lemma1(Collector& col) {
  const auto& st = col.settings();
  for (double s : {-0.5, -1.5, -2.5}) {
    for (int r : {0, 1}) {
      col.numeric({{"s", format_double(s)}, {"r", r}}, 1e-8,
                  [&] { return std::pair{quad({{s, r, false}}, st), Complex(0.0)}; });
    }
  }
  for (int r : {0, 1}) {
    col.numeric({{"s", "0"}, {"r", r}}, 1e-8, [&] { return std::pair{quad({{0.0, r, false}}, st), Complex(0.0)}; });
  }
}

void lemma3(Collector& col, const std::vector<std::pair<Complex, Complex>>& points) {
  const auto& st = col.settings();
  // s1 = s2 = 0 in exact arithmetic: zeta(0, a) = 1/2 - a and zeta(2) = pi^2/6
  {
    const Polynomial z0 = hurwitz_neg_int_poly(0);
    const Rational plain = (z0 * z0).integrate_unit();
    const Rational reflected = (z0 * z0.reflected()).integrate_unit();
    // zeta(2) = (1/6) pi^2; the pi^2 cancels against (2 pi)^{-2}
    const Rational z2 = zeta_even_closed(2).terms().front().coeff;
    const Rational rhs = Rational(2) * z2 / Rational(4);
    col.exact({{"s1", "0"}, {"s2", "0"}, {"form", "plain"}}, plain == rhs, plain.to_double(), rhs.to_double());
    col.exact({{"s1", "0"}, {"s2", "0"}, {"form", "reflected"}}, reflected == -rhs, reflected.to_double(),
              (-rhs).to_double());
  }
  const auto rhs_common = [](Complex s1, Complex s2) {
    return 2.0 * two_pi_pow(s1 + s2 - 2.0) * gamma(1.0 - s1) * gamma(1.0 - s2) * riemann_zeta(2.0 - s1 - s2);
  };
  for (const auto& [s1, s2] : points) {
    json p = pair_json(s1, s2);
    p["form"] = "plain";
    col.numeric(p, 1e-8, [&] {
      return std::pair{quad({{s1, 0, false}, {s2, 0, false}}, st),
                       rhs_common(s1, s2) * std::cos(0.5 * kPi * (s1 - s2))};
    });
    p["form"] = "reflected";
    col.numeric(p, 1e-8, [&] {
      return std::pair{quad({{s1, 0, false}, {s2, 0, true}}, st),
                       -rhs_common(s1, s2) * std::cos(0.5 * kPi * (s1 + s2))};
    });
  }
}

void lemma5(Collector& col) {
  constexpr double h = 1e-5;
  const std::vector<Complex> ss{-3.0, Complex(-2.2, 0.5), -1.4, Complex(-0.9, -0.7), -0.5};
  for (Complex s : ss) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      for (int r : {0, 1}) {
        col.numeric({{"s", format_complex(s)}, {"alpha", alpha}, {"r", r}}, 1e-6, [&] {
          const Complex fd = (hurwitz_zeta(s, alpha + h, r) - hurwitz_zeta(s, alpha - h, r)) / (2.0 * h);
          const Complex exact = r == 0 ? -s * hurwitz_zeta(s + 1.0, alpha)
                                       : -(hurwitz_zeta(s + 1.0, alpha) + s * hurwitz_zeta(s + 1.0, alpha, 1));
          return std::pair{fd, exact};
        });
      }
    }
  }
}

void lemma6(Collector& col) {
  const auto& st = col.settings();
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) {
      for (int c = b; c <= 4; ++c) {
        const auto ua = static_cast<unsigned>(a);
        const auto ub = static_cast<unsigned>(b);
        const auto uc = static_cast<unsigned>(c);
        const Rational sum = triple_bernoulli_integral(ua, ub, uc);
        const Rational poly = triple_integral_by_polynomials(ua, ub, uc);
        json p = triple_json(a, b, c);
        p["check"] = "triple_sum_vs_polynomial";
        col.exact(p, sum == poly, sum.to_double(), poly.to_double());
        p["check"] = "exact_vs_quadrature";
        col.numeric(p, 1e-10, [&] {
          const Complex q = quad({{1.0 - a, 0, false}, {1.0 - b, 0, false}, {1.0 - c, 0, false}}, st);
          return std::pair{Complex(sum.to_double()), q};
        });
        if ((a + b + c) % 2 != 0) {
          p["check"] = "odd_weight_vanishes";
          col.exact(p, sum.is_zero(), sum.to_double(), 0.0);
        }
      }
    }
  }
}

void lemma8(Collector& col) {
  const auto& st = col.settings();
  const ClosedForm value = integrate_zeta_product(1, 1, 1, 1);
  const ClosedForm expected = ClosedForm::zeta_prime(Rational(-1), 0, -2);
  col.exact({{"check", "symbolic"}}, value == expected, closedform_eval(value), closedform_eval(expected),
            value.to_string());
  col.numeric({{"check", "quadrature"}}, 1e-10, [&] {
    return std::pair{quad({{0.0, 0, false}, {0.0, 0, false}, {0.0, 1, false}}, st), closedform_eval(value)};
  });
}

void lemma9(Collector& col) {
  for (double re = -3.0; re <= 0.5 + 1e-12; re += 0.5) {
    for (double im : {0.0, 0.8}) {
      const Complex s(re, im);
      for (double alpha : {0.15, 0.5, 0.85}) {
        for (int r : {0, 1}) {
          col.numeric({{"s", format_complex(s)}, {"alpha", alpha}, {"r", r}, {"form", "exponential"}}, 1e-9,
                      [&] { return std::pair{hurwitz_zeta(s, alpha, r), hurwitz_fourier(s, alpha, r)}; });
        }
        col.numeric({{"s", format_complex(s)}, {"alpha", alpha}, {"r", 0}, {"form", "sine"}}, 1e-9,
                    [&] { return std::pair{hurwitz_zeta(s, alpha), hurwitz_fourier_sin_form(s, alpha)}; });
      }
    }
  }
}

void prop1_even(Collector& col) {
  const auto& st = col.settings();
  for (int n = 1; n <= 3; ++n) {
    const double k = 2.0 * n;
    std::string note;
    if (n == 1) {
      note = "the normalization (-1)^n (2pi)^{6n} / (6 ((2n-1)!)^3) applied to int B_{2n}^3 would give "
             "(-8/2835)*pi^6; the pipeline value is (1/2835)*pi^6";
    }
    col.numeric({{"n", n}}, 1e-8, [&] {
      return std::pair{closedform_eval(diagonal_even_closed(n)), T(k, k, k, st)};
    }, note);
  }
  const ClosedForm d1 = diagonal_even_closed(1);
  col.exact({{"n", 1}, {"check", "symbolic"}}, d1 == ClosedForm::pi_power(Rational(1, 2835), 6), closedform_eval(d1),
            std::pow(kPi, 6) / 2835.0, d1.to_string());
  for (int n = 1; n <= 2; ++n) {
    col.numeric({{"n", n}, {"check", "shifted_half"}}, 1e-8, [&] {
      return std::pair{T(2.0 * n - 1, 2.0 * n, 2.0 * n + 1, st), 0.5 * closedform_eval(diagonal_even_closed(n))};
    });
  }
}

void prop1_odd(Collector& col) {
  const auto& st = col.settings();
  for (int n = 0; n <= 2; ++n) {
    const double k = 2.0 * n + 1;
    col.numeric({{"n", n}}, 1e-8,
                [&] { return std::pair{closedform_eval(diagonal_odd_closed(n)), T(k, k, k, st)}; });
  }
  const ClosedForm d0 = diagonal_odd_closed(0);
  col.exact({{"n", 0}, {"check", "symbolic"}}, d0 == ClosedForm::zeta_prime(Rational(-8), 2, -2), closedform_eval(d0),
            2.0 * riemann_zeta(3.0), d0.to_string());
  for (int n = 0; n <= 1; ++n) {
    col.numeric({{"n", n}, {"check", "shifted_half"}}, 1e-8, [&] {
      return std::pair{T(2.0 * n, 2.0 * n + 1, 2.0 * n + 2, st), 0.5 * closedform_eval(diagonal_odd_closed(n))};
    });
  }
}

std::vector<std::array<int, 3>> odd_weight_triples() {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        if ((a + b + c) % 2 != 0) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

void prop2(Collector& col) {
  const auto& st = col.settings();
  for (const auto& [a, b, c] : odd_weight_triples()) {
    json p = triple_json(a, b, c);
    p["check"] = "closed_vs_numeric";
    col.numeric(p, 1e-8, [&] {
      return std::pair{closedform_eval(alternating_combo_odd(a, b, c)), alternating_combo_numeric(a, b, c, st.summation)};
    });
    p["check"] = "quadrature_vs_numeric";
    col.numeric(p, 1e-8, [&] {
      const int N = a + b + c;
      const Complex lhs = quad({{1.0 - a, 0, false}, {1.0 - b, 0, false}, {1.0 - c, 1, false}}, st);
      const double constant = std::pow(2.0, -N) * std::pow(kPi, 1 - N) * std::tgamma(a) * std::tgamma(b) *
                              std::tgamma(c) * sign_pow((N + 1) / 2);
      return std::pair{lhs, constant * alternating_combo_numeric(a, b, c, st.summation)};
    });
  }
  const ClosedForm c111 = alternating_combo_odd(1, 1, 1);
  const ClosedForm d0 = diagonal_odd_closed(0);
  col.exact({{"n1", 1}, {"n2", 1}, {"n3", 1}, {"check", "matches_odd_diagonal"}}, c111 == d0, closedform_eval(c111),
            closedform_eval(d0), c111.to_string());
}

void prop3(Collector& col) {
  const auto& st = col.settings();
  const std::vector<std::pair<int, int>> pairs{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {4, 3}, {3, 4}};
  for (const auto& [n1, n2] : pairs) {
    json p{{"n1", n1}, {"n2", n2}, {"check", "closed_vs_numeric"}};
    col.numeric(p, 1e-8, [&] {
      return std::pair{closedform_eval(double_zeta_odd_closed(n1, n2)), double_zeta(n1, n2, st.summation)};
    });
    p["check"] = "identity";
    col.numeric(p, 1e-8, [&] {
      const int N = n1 + n2;
      const Complex lhs = sign_pow(n1) * double_zeta(n2, n1, st.summation) +
                          sign_pow(n2) * double_zeta(n1, n2, st.summation);
      const Complex i1 = double(n1 - 1) * quad({{2.0 - n1, 0, false}, {1.0 - n2, 0, false}, {0.0, 1, false}}, st);
      const Complex i2 = double(n2 - 1) * quad({{2.0 - n2, 0, false}, {1.0 - n1, 0, false}, {0.0, 1, false}}, st);
      const double constant =
          2.0 * std::pow(2.0 * kPi, N - 1) * sign_pow((N + 1) / 2) / (std::tgamma(n1) * std::tgamma(n2));
      return std::pair{lhs, constant * (i1 + i2) + riemann_zeta(double(n1)) * riemann_zeta(double(n2))};
    });
  }
  const ClosedForm z23 = double_zeta_odd_closed(2, 3);
  const ClosedForm expected =
      zeta_closed(2) * zeta_closed(3) * Rational(3) - zeta_closed(5) * Rational(11, 2);
  col.exact({{"n1", 2}, {"n2", 3}, {"check", "canonical_basis"}}, z23 == expected, closedform_eval(z23),
            closedform_eval(expected), z23.to_string());
}

void prop4(Collector& col, const std::vector<std::pair<Complex, Complex>>& points) {
  const auto& st = col.settings();
  {
    // (2, 2) in exact arithmetic; every term is a rational multiple of pi^4
    const Rational lhs = zeta_neg_int(1) * zeta_neg_int(1);
    const Rational z2sq = (zeta_closed(2) * zeta_closed(2)).terms().front().coeff;
    const Rational z4 = zeta_closed(4).terms().front().coeff;
    const Rational dz22 = (z2sq - z4) / Rational(2);
    // cos(2 pi) = cos(0) = 1, Gamma(2) = 1
    const Rational bracket = z2sq + (dz22 + dz22 + z4);
    const Rational rhs = Rational(2) * bracket / Rational(16);
    col.exact({{"s1", "2"}, {"s2", "2"}, {"check", "exact"}}, lhs == rhs && lhs == Rational(1, 144), lhs.to_double(),
              rhs.to_double());
  }
  std::vector<std::pair<Complex, Complex>> all{{2.0, 2.0}, {3.0, 2.0}, {2.5, 2.2}};
  all.insert(all.end(), points.begin(), points.end());
  for (const auto& [s1, s2] : all) {
    col.numeric(pair_json(s1, s2), 1e-6, [&] {
      const Complex lhs = riemann_zeta(1.0 - s1) * riemann_zeta(1.0 - s2);
      const Complex rhs = 2.0 * two_pi_pow(-(s1 + s2)) * gamma(s1) * gamma(s2) *
                          (std::cos(0.5 * kPi * (s1 + s2)) * T(s1, s2, 0.0, st) +
                           std::cos(0.5 * kPi * (s1 - s2)) *
                               (T(s1, 0.0, s2, st) + T(s2, 0.0, s1, st) + riemann_zeta(s1 + s2)));
      return std::pair{lhs, rhs};
    });
  }
}

void corollary1(Collector& col) {
  const auto& st = col.settings();
  std::mt19937_64 rng(col.settings().seed ^ 0xC0FFEEu);
  std::uniform_real_distribution<double> re(1.5, 3.5);
  std::uniform_real_distribution<double> im(-1.0, 1.0);
  const std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};
  for (const auto& [n1, n2] : pairs) {
    std::vector<Complex> ss{2.5};
    for (int k = 0; k < 2; ++k) {
      const double r = re(rng);
      ss.emplace_back(r, im(rng));
    }
    for (Complex s : ss) {
      const Complex N = double(n1 + n2) + s;
      const Complex pref = 2.0 * two_pi_pow(-N) * std::tgamma(n1) * std::tgamma(n2) * gamma(s);
      const auto cosv = [&](Complex x) { return std::cos(0.5 * kPi * x); };
      json p{{"n1", n1}, {"n2", n2}, {"s", format_complex(s)}};
      p["form"] = "a";
      col.numeric(p, 1e-6, [&] {
        const Complex lhs = quad({{1.0 - n1, 0, false}, {1.0 - n2, 0, false}, {1.0 - s, 0, false}}, st);
        const Complex rhs = pref * (cosv(N - 2.0 * s) * T(n1, n2, s, st) +
                                    sign_pow(n1) * cosv(N) * T(n2, s, n1, st) +
                                    sign_pow(n2) * cosv(N) * T(s, n1, n2, st));
        return std::pair{lhs, rhs};
      });
      p["form"] = "b";
      col.numeric(p, 1e-6, [&] {
        const Complex lhs = quad({{1.0 - n1, 0, false}, {1.0 - n2, 0, false}, {1.0 - s, 0, true}}, st);
        const Complex rhs = pref * cosv(N) *
                            (T(n1, n2, s, st) + sign_pow(n2) * T(n2, s, n1, st) + sign_pow(n1) * T(s, n1, n2, st));
        return std::pair{lhs, rhs};
      });
      p["form"] = "parity";
      col.numeric(p, 1e-9, [&] {
        const Complex reflected = quad({{1.0 - n1, 0, false}, {1.0 - n2, 0, false}, {1.0 - s, 0, true}}, st);
        const Complex plain = quad({{1.0 - n1, 0, false}, {1.0 - n2, 0, false}, {1.0 - s, 0, false}}, st);
        return std::pair{reflected, sign_pow(n1 + n2) * plain};
      });
    }
  }
}

void corollary2(Collector& col) {
  const auto& st = col.settings();
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        const int N = a + b + c;
        const Rational lhs =
            triple_bernoulli_integral(static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c));
        if (N % 2 != 0) {
          // cos(pi N / 2) vanishes exactly; the informative relation is the
          // alternating combination checked under prop2
          col.exact(triple_json(a, b, c), lhs.is_zero(), lhs.to_double(), 0.0,
                    "cos(pi N/2) = 0 exactly; see prop2 for this triple");
          continue;
        }
        col.numeric(triple_json(a, b, c), 1e-8, [&] {
          const double cos_n = sign_pow(N / 2);
          const Complex rhs = 2.0 * std::pow(2.0 * kPi, -N) * std::tgamma(a) * std::tgamma(b) * std::tgamma(c) * cos_n *
                              (sign_pow(c) * T(a, b, c, st) + sign_pow(a) * T(b, c, a, st) + sign_pow(b) * T(c, a, b, st));
          return std::pair{Complex(lhs.to_double()), rhs};
        });
      }
    }
  }
}

void observations(Collector& col) {
  const auto& st = col.settings();
  std::mt19937_64 rng(col.settings().seed ^ 0x5EEDu);
  std::uniform_real_distribution<double> re(1.2, 3.0);
  std::uniform_real_distribution<double> im(-1.5, 1.5);
  for (int k = 0; k < 8; ++k) {
    TornheimArgs a;
    a.s1 = Complex(re(rng), im(rng));
    a.s2 = Complex(re(rng), im(rng));
    a.s3 = Complex(re(rng), im(rng));
    json p = args_json(a);
    p["relation"] = "symmetry";
    col.numeric(p, 1e-10, [&] { return std::pair{T(a, st), T(a.s2, a.s1, a.s3, st)}; });
  }
  const std::vector<std::pair<Complex, Complex>> pairs{
      {2.0, 2.0}, {3.0, 2.5}, {Complex(2.0, 1.0), Complex(3.0, -0.5)}, {Complex(1.8, 0.3), 2.6}};
  for (const auto& [s1, s2] : pairs) {
    json p = pair_json(s1, s2);
    p["relation"] = "third_argument_zero";
    col.numeric(p, 1e-10, [&] { return std::pair{T(s1, s2, 0.0, st), riemann_zeta(s1) * riemann_zeta(s2)}; });
    p["relation"] = "second_argument_zero";
    col.numeric(p, 1e-10, [&] { return std::pair{T(s1, 0.0, s2, st), double_zeta(s1, s2, st.summation)}; });
  }
  for (int a = 2; a <= 5; ++a) {
    for (int b = a; b <= 5; ++b) {
      col.numeric({{"n1", a}, {"n2", b}, {"relation", "stuffle"}}, 1e-8, [&] {
        const Complex lhs = double_zeta(a, b, st.summation) + double_zeta(b, a, st.summation);
        return std::pair{lhs, riemann_zeta(double(a)) * riemann_zeta(double(b)) - riemann_zeta(double(a + b))};
      });
    }
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 0; c <= 3; ++c) {
        const TornheimArgs base{double(a), double(b), double(c)};
        const TornheimArgs x{double(a), double(b - 1), double(c + 1)};
        const TornheimArgs y{double(a - 1), double(b), double(c + 1)};
        if (!base.in_convergence_region() || !x.in_convergence_region() || !y.in_convergence_region()) continue;
        json p = triple_json(a, b, c);
        p["relation"] = "index_recurrence";
        col.numeric(p, 1e-8, [&] { return std::pair{T(x, st) + T(y, st), T(base, st)}; });
      }
    }
  }
}

void hwz(Collector& col) {
  const auto& st = col.settings();
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        const TornheimArgs args{double(a), double(b), double(c)};
        if (!args.in_convergence_region()) continue;
        col.numeric(triple_json(a, b, c), 1e-8, [&] {
          Complex reduced = 0.0;
          for (const auto& t : hwz_reduce(a, b, c)) {
            reduced += t.coeff.to_double() * double_zeta(double(t.args[0]), double(t.args[2]), st.summation);
          }
          return std::pair{T(args, st), reduced};
        });
      }
    }
  }
  const auto r = hwz_reduce(1, 1, 1);
  const bool ok = r == std::vector<HwzTerm>{{Rational(2), {1, 0, 2}}};
  json p = triple_json(1, 1, 1);
  p["check"] = "coefficients";
  col.exact(p, ok, r.empty() ? 0.0 : r.front().coeff.to_double(), 2.0);
}

using Battery = void (*)(Collector&, const VerifySettings&);

const std::map<std::string, Battery>& batteries() {
  static const std::map<std::string, Battery> table{
      {"theorem_i",
       [](Collector& c, const VerifySettings& s) {
         auto pts = theorem_fixed_points(false);
         const auto grid = theorem_grid(s.seed, s.grid_points);
         pts.insert(pts.end(), grid.begin(), grid.end());
         theorem_cases(c, pts, false);
       }},
      {"theorem_ii",
       [](Collector& c, const VerifySettings& s) {
         auto pts = theorem_fixed_points(true);
         const auto grid = theorem_grid(s.seed + 1, s.grid_points);
         pts.insert(pts.end(), grid.begin(), grid.end());
         theorem_cases(c, pts, true);
       }},
      {"lemma1", [](Collector& c, const VerifySettings&) { lemma1(c); }},
      {"lemma3",
       [](Collector& c, const VerifySettings& s) {
         auto pts = random_pairs(s.seed + 2, s.grid_points, -3.0, 0.0, 1.0);
         pts.insert(pts.begin(), {{-0.5, -1.5}, {-1.0, -1.0}});
         lemma3(c, pts);
       }},
      {"lemma5", [](Collector& c, const VerifySettings&) { lemma5(c); }},
      {"lemma6", [](Collector& c, const VerifySettings&) { lemma6(c); }},
      {"lemma8", [](Collector& c, const VerifySettings&) { lemma8(c); }},
      {"lemma9_crosscheck", [](Collector& c, const VerifySettings&) { lemma9(c); }},
      {"prop1_even", [](Collector& c, const VerifySettings&) { prop1_even(c); }},
      {"prop1_odd", [](Collector& c, const VerifySettings&) { prop1_odd(c); }},
      {"prop2", [](Collector& c, const VerifySettings&) { prop2(c); }},
      {"prop3", [](Collector& c, const VerifySettings&) { prop3(c); }},
      {"prop4",
       [](Collector& c, const VerifySettings& s) {
         prop4(c, random_pairs(s.seed + 3, std::max(10, s.grid_points / 2), 1.5, 3.0, 1.0));
       }},
      {"corollary1", [](Collector& c, const VerifySettings&) { corollary1(c); }},
      {"corollary2", [](Collector& c, const VerifySettings&) { corollary2(c); }},
      {"observations", [](Collector& c, const VerifySettings&) { observations(c); }},
      {"hwz", [](Collector& c, const VerifySettings&) { hwz(c); }},
  };
  return table;
}

void sort_cases(std::vector<IdentityCase>& cases) {
  std::stable_sort(cases.begin(), cases.end(), [](const IdentityCase& a, const IdentityCase& b) {
    if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
    return a.params.dump() < b.params.dump();
  });
}

VerificationReport new_report(std::string suite, const VerifySettings& settings) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.seed = settings.seed;
  r.settings = settings.to_json();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  s.total = cases.size();
  s.passed = static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
  s.failed = s.total - s.passed;
  return s;
}

json VerifySettings::to_json() const {
  return json{{"seed", seed},
              {"tol", tol ? json(*tol) : json(nullptr)},
              {"grid_points", grid_points},
              {"cutoff", summation.cutoff},
              {"max_cutoff", summation.max_cutoff},
              {"tail_terms", summation.tail_terms},
              {"summation_tol", summation.target_tol},
              {"quad_order", quad.gauss_order},
              {"max_depth", quad.max_depth},
              {"quad_tol", quad.target_tol}};
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [k, _] : batteries()) v.push_back(k);
    return v;
  }();
  return ids;
}

std::vector<TornheimArgs> theorem_grid(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(1.5, 3.5);
  std::uniform_real_distribution<double> im(-2.0, 2.0);
  std::vector<TornheimArgs> out;
  for (int i = 0; i < count; ++i) {
    TornheimArgs a;
    for (Complex* s : {&a.s1, &a.s2, &a.s3}) {
      const double r = re(rng);
      *s = Complex(r, im(rng));
    }
    out.push_back(a);
  }
  return out;
}

IdentityCase make_case(std::string id, json params, Complex lhs, Complex rhs, double tol, std::string note) {
  IdentityCase c{std::move(id), std::move(params), lhs, rhs, 0.0, 0.0, tol, false, std::move(note)};
  c.abs_err = std::abs(lhs - rhs);
  const double scale = std::abs(rhs);
  c.rel_err = scale > 0.0 ? c.abs_err / scale : (c.abs_err == 0.0 ? 0.0 : kInf);
  c.pass = c.abs_err <= tol || c.rel_err <= tol;
  return c;
}

VerificationReport verify_theorem_i(const std::vector<TornheimArgs>& points, const VerifySettings& settings) {
  VerificationReport r = new_report("theorem_i", settings);
  Collector col("theorem_i", settings, r.cases);
  theorem_cases(col, points, false);
  return r;
}

VerificationReport verify_theorem_ii(const std::vector<TornheimArgs>& points, const VerifySettings& settings) {
  VerificationReport r = new_report("theorem_ii", settings);
  Collector col("theorem_ii", settings, r.cases);
  theorem_cases(col, points, true);
  return r;
}

VerificationReport verify_lemma3(const std::vector<std::pair<Complex, Complex>>& points,
                                 const VerifySettings& settings) {
  VerificationReport r = new_report("lemma3", settings);
  Collector col("lemma3", settings, r.cases);
  lemma3(col, points);
  return r;
}

VerificationReport verify_prop4(const std::vector<std::pair<Complex, Complex>>& points,
                                const VerifySettings& settings) {
  VerificationReport r = new_report("prop4", settings);
  Collector col("prop4", settings, r.cases);
  prop4(col, points);
  return r;
}

VerificationReport run_suite(const std::string& id, const VerifySettings& settings) {
  if (id == "all") return run_all(settings);
  const auto it = batteries().find(id);
  if (it == batteries().end()) throw DomainError("unknown verification suite: " + id);
  VerificationReport r = new_report(id, settings);
  Collector col(id, settings, r.cases);
  it->second(col, settings);
  sort_cases(r.cases);
  return r;
}

VerificationReport run_all(const VerifySettings& settings) {
  VerificationReport r = new_report("all", settings);
  for (const auto& [id, battery] : batteries()) {
    Collector col(id, settings, r.cases);
    battery(col, settings);
  }
  sort_cases(r.cases);
  return r;
}

json to_json(const VerificationReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json j{{"identity_id", c.identity_id}, {"params", c.params},   {"lhs", cjson(c.lhs)},
           {"rhs", cjson(c.rhs)},          {"abs_err", c.abs_err}, {"rel_err", c.rel_err},
           {"tol", c.tol},                 {"pass", c.pass}};
    if (!c.note.empty()) j["note"] = c.note;
    cases.push_back(std::move(j));
  }
  const ReportSummary s = report.summary();
  return json{{"suite", report.suite},
              {"seed", report.seed},
              {"settings", report.settings},
              {"cases", std::move(cases)},
              {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.settings = j.at("settings");
  for (const auto& c : j.at("cases")) {
    IdentityCase x;
    x.identity_id = c.at("identity_id").get<std::string>();
    x.params = c.at("params");
    x.lhs = cparse(c.at("lhs"));
    x.rhs = cparse(c.at("rhs"));
    x.abs_err = number_or(c.at("abs_err"), kInf);
    x.rel_err = number_or(c.at("rel_err"), kInf);
    x.tol = c.at("tol").get<double>();
    x.pass = c.at("pass").get<bool>();
    x.note = c.value("note", std::string{});
    r.cases.push_back(std::move(x));
  }
  return r;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,note\n";
  for (const auto& c : report.cases) {
    out << csv_field(c.identity_id) << ',' << csv_field(c.params.dump()) << ',' << format_double(c.lhs.real()) << ','
        << format_double(c.lhs.imag()) << ',' << format_double(c.rhs.real()) << ',' << format_double(c.rhs.imag())
        << ',' << format_double(c.abs_err) << ',' << format_double(c.rel_err) << ',' << format_double(c.tol) << ','
        << (c.pass ? "true" : "false") << ',' << csv_field(c.note) << '\n';
  }
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    char err[64];
    std::snprintf(err, sizeof err, "%.3e", c.abs_err);
    char tol[64];
    std::snprintf(tol, sizeof tol, "%.1e", c.tol);
    out << (c.pass ? "PASS " : "FAIL ") << c.identity_id << ' ' << c.params.dump() << " abs_err=" << err
        << " tol=" << tol;
    if (!c.note.empty()) out << "  (" << c.note << ')';
    out << '\n';
  }
  const ReportSummary s = report.summary();
  out << "suite " << report.suite << " seed " << report.seed << ": " << s.passed << '/' << s.total << " passed, "
      << s.failed << " failed\n";
  return out.str();
}

}  // namespace tornheim
