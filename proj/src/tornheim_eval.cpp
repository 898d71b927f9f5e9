#include "tornheim/tornheim_eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "tornheim/alpha_calculus.hpp"
#include "tornheim/bernoulli.hpp"
#include "tornheim/errors.hpp"

namespace tornheim {

namespace {

constexpr int kMaxTailTerms = 30;

Complex cpow(double x, Complex e) { return std::exp(e * std::log(x)); }

// B_{2j} / (2j)!
double em_coefficient(int j) {
  static const std::vector<double> table = [] {
    std::vector<double> t(kMaxTailTerms + 1, 0.0);
    for (int k = 1; k <= kMaxTailTerms; ++k) {
      t[static_cast<std::size_t>(k)] =
          (bernoulli_number(2u * static_cast<unsigned>(k)) / Rational(factorial(2u * static_cast<unsigned>(k))))
              .to_double();
    }
    return t;
  }();
  return table[static_cast<std::size_t>(j)];
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// e (e-1) ... (e-l+1), l = 0..n
std::vector<Complex> falling_table(Complex e, int n) {
  std::vector<Complex> t(static_cast<std::size_t>(n) + 1);
  t[0] = 1.0;
  for (int l = 1; l <= n; ++l) t[static_cast<std::size_t>(l)] = t[static_cast<std::size_t>(l) - 1] * (e - double(l - 1));
  return t;
}

// int_K^inf x^{-a} (x + b)^{-c} dx for 0 <= b <= K, Re(a + c) > 1.
Complex power_tail_integral(Complex a, Complex c, double b, double K) {
  const double z = b / (K + b);
  const Complex p = a + c - 1.0;
  Complex coef = 1.0;  // (a)_k z^k / k!
  Complex sum = 1.0 / p;
  for (int k = 1; k < 400 && z > 0.0; ++k) {
    coef *= (a + double(k - 1)) * z / double(k);
    const Complex term = coef / (p + double(k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return cpow(K + b, 1.0 - a - c) * sum;
}

// int_0^{1/2} (1-w)^{-q} w^{p-1} dw, Re p > 0.
Complex half_beta(Complex p, Complex q) {
  Complex coef = 1.0;  // (q)_k / k!
  Complex half_pow = std::exp(p * std::log(0.5));
  Complex sum = half_pow / p;
  for (int k = 1; k < 400; ++k) {
    coef *= (q + double(k - 1)) / double(k);
    half_pow *= 0.5;
    const Complex term = coef * half_pow / (p + double(k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// k-th derivative at x = K of x^{-a} (x + b)^{-c}.
class ProductDerivatives {
 public:
  ProductDerivatives(Complex a, Complex c, int max_order)
      : fa_(falling_table(-a, max_order)), fc_(falling_table(-c, max_order)), a_(a), c_(c) {}

  Complex at(double K, double b, int k) const {
    const Complex xa = cpow(K, -a_);
    const Complex xc = cpow(K + b, -c_);
    Complex sum = 0.0;
    for (int l = 0; l <= k; ++l) {
      sum += binom(k, l) * fa_[static_cast<std::size_t>(l)] * std::pow(K, -l) * fc_[static_cast<std::size_t>(k - l)] *
             std::pow(K + b, -(k - l));
    }
    return xa * xc * sum;
  }

 private:
  std::vector<Complex> fa_;
  std::vector<Complex> fc_;
  Complex a_;
  Complex c_;
};

// sum_{n > K} n^{-a} (n + b)^{-c} by Euler-Maclaurin from K.
Complex power_tail_sum(Complex a, Complex c, double b, double K, int J) {
  const ProductDerivatives d(a, c, 2 * J - 1);
  Complex sum = power_tail_integral(a, c, b, K) - 0.5 * d.at(K, b, 0);
  for (int j = 1; j <= J; ++j) sum -= em_coefficient(j) * d.at(K, b, 2 * j - 1);
  return sum;
}

Complex tornheim_at_cutoff(Complex s1, Complex s2, Complex s3, int cutoff, int J) {
  const double K = cutoff;
  const auto Ku = static_cast<std::size_t>(cutoff);

  // m, n <= K
  std::vector<Complex> p1(Ku + 1);
  std::vector<Complex> p2(Ku + 1);
  std::vector<Complex> p3(2 * Ku + 1);
  for (std::size_t i = 1; i <= Ku; ++i) {
    p1[i] = cpow(double(i), -s1);
    p2[i] = cpow(double(i), -s2);
  }
  for (std::size_t i = 2; i <= 2 * Ku; ++i) p3[i] = cpow(double(i), -s3);
  Complex head = 0.0;
  for (std::size_t m = 1; m <= Ku; ++m) {
    Complex row = 0.0;
    for (std::size_t n = 1; n <= Ku; ++n) row += p2[n] * p3[m + n];
    head += p1[m] * row;
  }

  // one index <= K, the other > K
  Complex strips = 0.0;
  for (std::size_t i = 1; i <= Ku; ++i) {
    strips += p1[i] * power_tail_sum(s2, s3, double(i), K, J);
    strips += p2[i] * power_tail_sum(s1, s3, double(i), K, J);
  }

  // both > K: Euler-Maclaurin in n, then in m
  const Complex sigma = s1 + s2 + s3;
  const Complex corner = cpow(K, 2.0 - sigma) / (sigma - 2.0) *
                         (half_beta(s2 + s3 - 1.0, s2) + half_beta(s1 + s3 - 1.0, s1));
  const std::vector<Complex> f1 = falling_table(-s1, 2 * J);
  const std::vector<Complex> f2 = falling_table(-s2, 2 * J);
  const std::vector<Complex> f3 = falling_table(-s3, 2 * J);
  const Complex K1 = cpow(K, -s1);
  const Complex K2 = cpow(K, -s2);

  // phi(x) = x^{-s1} int_K^inf y^{-s2} (y + x)^{-s3} dy, differentiated at x = K
  const auto phi = [&](int k) {
    Complex sum = 0.0;
    for (int l = 0; l <= k; ++l) {
      sum += binom(k, l) * f1[static_cast<std::size_t>(l)] * std::pow(K, -l) * f3[static_cast<std::size_t>(k - l)] *
             power_tail_integral(s2, s3 + double(k - l), K, K);
    }
    return K1 * sum;
  };
  Complex quadrant = corner - 0.5 * phi(0);
  for (int j = 1; j <= J; ++j) quadrant -= em_coefficient(j) * phi(2 * j - 1);

  quadrant -= 0.5 * K2 * power_tail_sum(s1, s3, K, K, J);
  for (int j = 1; j <= J; ++j) {
    const int q = 2 * j - 1;
    Complex sum = 0.0;
    for (int l = 0; l <= q; ++l) {
      sum += binom(q, l) * f2[static_cast<std::size_t>(l)] * std::pow(K, -l) * f3[static_cast<std::size_t>(q - l)] *
             power_tail_sum(s1, s3 + double(q - l), K, K, J);
    }
    quadrant -= em_coefficient(j) * K2 * sum;
  }

  return head + strips + quadrant;
}

Complex double_zeta_at_cutoff(Complex s1, Complex s2, int cutoff, int J) {
  Complex sum = 0.0;
  for (int m = 1; m <= cutoff; ++m) sum += cpow(double(m), -s1) * hurwitz_zeta(s2, double(m) + 1.0);
  // sum_{m > K} m^{-s1} zeta(s2, m + 1) from the asymptotic expansion of
  // zeta(s2, m + 1) in m
  const double a = cutoff + 1.0;
  const Complex w = s1 + s2;
  sum += hurwitz_zeta(w - 1.0, a) / (s2 - 1.0) - 0.5 * hurwitz_zeta(w, a);
  Complex rising = s2;  // (s2)_{2j-1}
  for (int j = 1; j <= J; ++j) {
    if (j > 1) rising *= (s2 + double(2 * j - 3)) * (s2 + double(2 * j - 2));
    sum += em_coefficient(j) * rising * hurwitz_zeta(w + double(2 * j - 1), a);
  }
  return sum;
}

template <class F>
Complex escalate(F&& at_cutoff, const SummationSettings& settings, const char* what) {
  if (settings.cutoff < 2 || settings.tail_terms < 1 || settings.tail_terms > kMaxTailTerms) {
    throw DomainError(std::string(what) + ": invalid summation settings");
  }
  int K = settings.cutoff;
  Complex previous = at_cutoff(K);
  double diff = 0.0;
  while (2 * K <= std::max(settings.max_cutoff, 2 * settings.cutoff)) {
    K *= 2;
    const Complex current = at_cutoff(K);
    diff = std::abs(current - previous);
    if (diff <= settings.target_tol * std::max(1.0, std::abs(current))) return current;
    previous = current;
  }
  throw ConvergenceError(std::string(what) + ": cutoff escalation did not settle (last change " +
                         std::to_string(diff) + ")");
}

int sin_half_pi(int k) {
  // sin(pi k / 2)
  switch (((k % 4) + 4) % 4) {
    case 1:
      return 1;
    case 3:
      return -1;
    default:
      return 0;
  }
}

Rational pow2(int n) { return Rational(2).pow(n); }

Rational factorial_q(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

}  // namespace

bool TornheimArgs::in_convergence_region() const {
  return (s2 + s3).real() > 1.0 && (s1 + s3).real() > 1.0 && (s1 + s2 + s3).real() > 2.0;
}

Complex tornheim_numeric(const TornheimArgs& args, const SummationSettings& settings) {
  if (!args.in_convergence_region()) throw DomainError("tornheim_numeric: arguments outside the convergence region");
  return escalate([&](int K) { return tornheim_at_cutoff(args.s1, args.s2, args.s3, K, settings.tail_terms); },
                  settings, "tornheim_numeric");
}

Complex double_zeta(Complex s1, Complex s2, const SummationSettings& settings) {
  if (s2.real() <= 1.0 || (s1 + s2).real() <= 2.0) {
    throw DomainError("double_zeta requires Re s2 > 1 and Re(s1 + s2) > 2");
  }
  return escalate([&](int K) { return double_zeta_at_cutoff(s1, s2, K, settings.tail_terms); }, settings,
                  "double_zeta");
}

std::vector<HwzTerm> hwz_reduce(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 0) throw DomainError("hwz_reduce requires a, b >= 1 and c >= 0");
  const int N = a + b + c;
  std::map<int, Rational> coeffs;
  for (int i = 1; i <= a; ++i) {
    coeffs[i] += Rational(binomial(static_cast<unsigned>(a + b - i - 1), static_cast<unsigned>(a - i)));
  }
  for (int i = 1; i <= b; ++i) {
    coeffs[i] += Rational(binomial(static_cast<unsigned>(a + b - i - 1), static_cast<unsigned>(b - i)));
  }
  std::vector<HwzTerm> out;
  for (const auto& [i, q] : coeffs) {
    if (!q.is_zero()) out.push_back({q, {i, 0, N - i}});
  }
  return out;
}

ClosedForm diagonal_even_closed(int n) {
  if (n < 1) throw DomainError("diagonal_even_closed requires n >= 1");
  const auto m = static_cast<unsigned>(2 * n);
  const Rational integral = triple_bernoulli_integral(m, m, m);
  const Rational f = factorial_q(2 * n - 1);
  Rational coeff = integral * pow2(6 * n) / (Rational(6) * f * f * f);
  if (n % 2 != 0) coeff = -coeff;
  return ClosedForm::pi_power(coeff, 6 * n);
}

ClosedForm diagonal_odd_closed(int n) {
  if (n < 0) throw DomainError("diagonal_odd_closed requires n >= 0");
  const int k = 2 * n + 1;
  const Rational f = factorial_q(2 * n);
  Rational constant = Rational(2) * pow2(6 * n + 2) / (f * f * f);
  if (n % 2 != 0) constant = -constant;
  return (integrate_zeta_product(k, k, k, 1) * constant).times_pi(6 * n + 2);
}

ClosedForm alternating_combo_odd(int n1, int n2, int n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw DomainError("alternating_combo_odd requires positive integers");
  const int N = n1 + n2 + n3;
  if (N % 2 == 0) throw DomainError("alternating_combo_odd requires n1 + n2 + n3 odd");
  Rational constant = pow2(N) / (factorial_q(n1 - 1) * factorial_q(n2 - 1) * factorial_q(n3 - 1));
  if (((N + 1) / 2) % 2 != 0) constant = -constant;
  return (integrate_zeta_product(n1, n2, n3, 1) * constant).times_pi(N - 1);
}

Complex alternating_combo_numeric(int n1, int n2, int n3, const SummationSettings& settings) {
  const auto T = [&](int a, int b, int c) {
    return tornheim_numeric({double(a), double(b), double(c)}, settings);
  };
  const auto sign = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };
  return sign(n3) * T(n1, n2, n3) + sign(n1 - 1) * T(n2, n3, n1) + sign(n2 - 1) * T(n3, n1, n2);
}

ClosedForm double_zeta_odd_closed(int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw DomainError("double_zeta_odd_closed requires n1, n2 > 1");
  const int N = n1 + n2;
  if (N % 2 == 0) throw DomainError("double_zeta_odd_closed requires n1 + n2 odd");

  // int_0^1 zeta'(0, a) d/da [zeta(1-n1, a) zeta(1-n2, a)] da
  //   = pi (n1-1)! (n2-1)! / (2 pi)^N
  //     * { s * (zeta_2(n2, n1) - zeta_2(n1, n2)) + c * zeta(n1) zeta(n2) }
  // with s = sin(pi (n1-n2)/2), c = sin(pi N/2).
  const Polynomial product = hurwitz_neg_int_poly(static_cast<unsigned>(n1 - 1)) *
                             hurwitz_neg_int_poly(static_cast<unsigned>(n2 - 1));
  const ClosedForm integral = integrate_poly_zeta({product.derivative(), 0, 1});
  const ClosedForm scaled =
      (integral * (pow2(N) / (factorial_q(n1 - 1) * factorial_q(n2 - 1)))).times_pi(N - 1);

  const ClosedForm zz = zeta_closed(n1) * zeta_closed(n2);
  const Rational s(sin_half_pi(n1 - n2));
  const Rational c(sin_half_pi(N));
  const ClosedForm difference = (scaled - zz * c) * s;  // zeta_2(n2,n1) - zeta_2(n1,n2)
  const ClosedForm sum = zz - zeta_closed(N);           // zeta_2(n1,n2) + zeta_2(n2,n1)
  return (sum - difference) * Rational(1, 2);
}

ClosedForm double_zeta_closed(int n1, int n2) {
  if (n1 < 1 || n2 < 2 || (n1 + n2) % 2 == 0) {
    throw DomainError("double_zeta_closed requires odd weight, n1 >= 1 and n2 > 1");
  }
  if (n1 > 1) return double_zeta_odd_closed(n1, n2);
  ClosedForm out = zeta_closed(n2 + 1) * Rational(n2, 2);
  for (int j = 1; j <= n2 - 2; ++j) out -= (zeta_closed(j + 1) * zeta_closed(n2 - j)) * Rational(1, 2);
  return out;
}

std::optional<ClosedForm> tornheim_closed(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return std::nullopt;
  const TornheimArgs args{double(a), double(b), double(c)};
  if (!args.in_convergence_region()) return std::nullopt;
  const int N = a + b + c;
  if (N % 2 != 0) {
    if (a == 0) return double_zeta_closed(b, c);
    if (b == 0) return double_zeta_closed(a, c);
    ClosedForm out;
    for (const auto& term : hwz_reduce(a, b, c)) out += double_zeta_closed(term.args[0], term.args[2]) * term.coeff;
    return out;
  }
  if (a == b && b == c) return diagonal_even_closed(a / 2);
  if (c == 0 && a >= 2 && b >= 2 && (a % 2 == 0 || b % 2 == 0)) return zeta_closed(a) * zeta_closed(b);
  return std::nullopt;
}

}  // namespace tornheim
