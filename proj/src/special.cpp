#include "tornheim/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "tornheim/bernoulli.hpp"
#include "tornheim/errors.hpp"

namespace tornheim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

Complex check_result(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ConvergenceError(std::string(what) + ": non-finite result");
  }
  return z;
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// B_{2j} / (2j)! for j = 0..kMaxCorrections.
constexpr int kMaxCorrections = 40;

const std::array<double, kMaxCorrections + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kMaxCorrections + 1> t{};
    for (int j = 0; j <= kMaxCorrections; ++j) {
      const auto n = static_cast<unsigned>(2 * j);
      t[static_cast<std::size_t>(j)] = (bernoulli_number(n) / factorial(n)).to_double();
    }
    return t;
  }();
  return table;
}

// x^{-s} for real x > 0.
Complex real_pow_neg(double x, Complex s) {
  const double l = std::log(x);
  return std::polar(std::exp(-s.real() * l), -s.imag() * l);
}

struct TailResult {
  Complex value;
  bool converged = false;
};

// sum_{k >= M} (k + alpha)^{-s} and its s-derivative, x = M + alpha.
TailResult euler_maclaurin_tail(Complex s, double x, int r, int max_terms, double tol) {
  const auto& b = bernoulli_ratios();
  const double lx = std::log(x);
  const Complex xs = real_pow_neg(x, s);  // x^{-s}
  const Complex sm1 = s - 1.0;
  Complex value;
  if (r == 0) {
    value = xs * x / sm1 + 0.5 * xs;
  } else {
    value = xs * x * (-lx / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * lx * xs;
  }
  const double scale = std::max(1.0, std::abs(value));

  Complex poch = s;  // (s)_{2j-1}
  Complex dpoch = 1.0;
  Complex xp = xs / x;  // x^{-s-2j+1}
  const double inv_x2 = 1.0 / (x * x);
  double previous = INFINITY;
  const int terms = std::min(max_terms, kMaxCorrections);
  for (int j = 1; j <= terms; ++j) {
    const double bj = b[static_cast<std::size_t>(j)];
    const Complex term = r == 0 ? bj * poch * xp : bj * xp * (dpoch - poch * lx);
    value += term;
    const double mag = std::abs(term);
    const Complex f1 = s + static_cast<double>(2 * j - 1);
    const Complex f2 = s + static_cast<double>(2 * j);
    // A small term only ends the sum once the terms have started shrinking;
    // for x < 1 and integer s they can grow again before terminating.
    const double ratio =
        j < kMaxCorrections ? std::abs(b[static_cast<std::size_t>(j) + 1] / bj) * std::abs(f1 * f2) * inv_x2 : 0.0;
    if (mag <= tol * scale && ratio <= 1.0) return {value, true};
    if (j >= 3 && mag > previous) return {value, false};
    previous = mag;
    dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch *= f1 * f2;
    xp *= inv_x2;
  }
  return {value, false};
}

// Euler transform of sum_{n >= N} z^n g(n), |z| = 1, z != 1, from the values
// g(N), g(N+1), ... . Long double keeps the forward differences clean.
template <class G>
bool periodic_tail(std::complex<long double> z, const G& g, int n0, int max_terms, double tol,
                   std::complex<long double>& out) {
  using LC = std::complex<long double>;
  std::vector<LC> diffs(static_cast<std::size_t>(max_terms) + 1);
  for (int i = 0; i <= max_terms; ++i) diffs[static_cast<std::size_t>(i)] = g(n0 + i);
  const LC one(1.0L, 0.0L);
  const LC w = z / (one - z);
  LC weight = one;
  LC acc(0.0L, 0.0L);
  long double previous = INFINITY;
  for (int k = 0; k <= max_terms; ++k) {
    const LC term = weight * diffs[0];
    acc += term;
    const long double mag = std::abs(term);
    if (mag <= static_cast<long double>(tol) * 1e-2L) {
      out = std::pow(z, static_cast<long double>(n0)) / (one - z) * acc;
      return true;
    }
    if (k >= 4 && mag > previous) break;
    previous = mag;
    for (int i = 0; i < max_terms - k; ++i) {
      diffs[static_cast<std::size_t>(i)] = diffs[static_cast<std::size_t>(i) + 1] - diffs[static_cast<std::size_t>(i)];
    }
    weight *= w;
  }
  return false;
}

// sum_{n >= 1} z^n n^{s-1} (log n)^p for p in {0, 1}.
std::complex<long double> periodic_series(std::complex<long double> z, Complex s, int p,
                                          const FourierSettings& settings) {
  using LC = std::complex<long double>;
  const LC e(s.real() - 1.0, s.imag());
  const auto g = [&](int n) {
    const long double ln = std::log(static_cast<long double>(n));
    LC v = std::exp(e * ln);
    if (p == 1) v *= ln;
    return v;
  };
  for (int n0 = settings.cutoff; n0 <= settings.max_cutoff; n0 *= 2) {
    LC tail;
    if (!periodic_tail(z, g, n0, settings.transform_terms, settings.target_tol, tail)) continue;
    LC head(0.0L, 0.0L);
    LC zn = z;
    for (int n = 1; n < n0; ++n) {
      head += zn * g(n);
      zn *= z;
    }
    return head + tail;
  }
  throw ConvergenceError("hurwitz_fourier: oscillatory tail did not meet tolerance");
}

void check_fourier_domain(Complex s, double alpha) {
  require_finite(s, "hurwitz_fourier");
  if (s.real() >= 1.0) throw DomainError("hurwitz_fourier requires Re s < 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("hurwitz_fourier requires 0 < alpha < 1");
}

}  // namespace

Complex gamma(Complex z) {
  require_finite(z, "gamma");
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  static constexpr std::array<double, 9> p = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                              771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                              -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  z -= 1.0;
  Complex x = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) x += p[i] / (z + static_cast<double>(i));
  const Complex t = z + g + 0.5;
  return check_result(std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x, "gamma");
}

Complex digamma(Complex z) {
  require_finite(z, "digamma");
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at nonpositive integer");
  if (z.real() < 0.5) return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  Complex acc = 0.0;
  while (z.real() < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // log z - 1/(2z) - sum_k B_{2k} / (2k z^{2k})
  const Complex inv2 = 1.0 / (z * z);
  Complex series = 0.0;
  Complex power = inv2;
  for (unsigned k = 1; k <= 10; ++k) {
    series += bernoulli_number(2 * k).to_double() / (2.0 * k) * power;
    power *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

Complex hurwitz_zeta(Complex s, double alpha, int r, const EvalSettings& settings) {
  require_finite(s, "hurwitz_zeta");
  if (r != 0 && r != 1) throw DomainError("hurwitz_zeta supports r in {0, 1}");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("hurwitz_zeta requires alpha > 0");
  if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");

  static constexpr std::array<int, 22> ladder = {0,  1,  2,  3,  4,  5,   6,   8,   10,  12,  16,
                                                 20, 24, 32, 40, 48, 64, 80, 100, 128, 160, 200};
  for (int m : ladder) {
    if (m > settings.shift_terms) break;
    const auto tail = euler_maclaurin_tail(s, m + alpha, r, settings.correction_terms, settings.target_tol);
    if (!tail.converged) continue;
    Complex head = 0.0;
    for (int k = 0; k < m; ++k) {
      const double x = k + alpha;
      const Complex term = real_pow_neg(x, s);
      head += r == 0 ? term : -std::log(x) * term;
    }
    return check_result(head + tail.value, "hurwitz_zeta");
  }
  throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin tail did not meet tolerance at s = " +
                         std::to_string(s.real()) + "+" + std::to_string(s.imag()) + "i");
}

Complex hurwitz_fourier(Complex s, double alpha, int r, const FourierSettings& settings) {
  check_fourier_domain(s, alpha);
  if (r != 0 && r != 1) throw DomainError("hurwitz_fourier supports r in {0, 1}");
  using LC = std::complex<long double>;
  const long double theta = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(alpha);
  const Complex g1 = gamma(1.0 - s);
  const Complex psi = r == 1 ? digamma(1.0 - s) : Complex(0.0);
  Complex total = 0.0;
  for (int sign : {+1, -1}) {
    const LC z = std::polar(1.0L, sign * theta);
    const Complex log_factor(kLog2Pi, sign * kPi / 2.0);  // principal log(2 pi i n) - log n
    const Complex c = g1 * std::exp((s - 1.0) * log_factor);
    const auto s0 = static_cast<Complex>(periodic_series(z, s, 0, settings));
    if (r == 0) {
      total += c * s0;
    } else {
      const auto s1 = static_cast<Complex>(periodic_series(z, s, 1, settings));
      total += c * ((log_factor - psi) * s0 + s1);
    }
  }
  return check_result(total, "hurwitz_fourier");
}

Complex hurwitz_fourier_sin_form(Complex s, double alpha, const FourierSettings& settings) {
  check_fourier_domain(s, alpha);
  using LC = std::complex<long double>;
  const long double theta = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(alpha);
  const LC ls(s.real(), s.imag());
  const LC half_pi_s = std::numbers::pi_v<long double> / 2.0L * ls;
  const LC e = ls - 1.0L;
  const auto g = [&](int n) { return std::exp(e * std::log(static_cast<long double>(n))); };
  for (int n0 = settings.cutoff; n0 <= settings.max_cutoff; n0 *= 2) {
    LC up;
    LC down;
    if (!periodic_tail(std::polar(1.0L, theta), g, n0, settings.transform_terms, settings.target_tol, up)) continue;
    if (!periodic_tail(std::polar(1.0L, -theta), g, n0, settings.transform_terms, settings.target_tol, down)) {
      continue;
    }
    // sin(c + theta n) = (e^{i(c + theta n)} - e^{-i(c + theta n)}) / 2i
    const LC i(0.0L, 1.0L);
    LC sum = (std::exp(i * half_pi_s) * up - std::exp(-i * half_pi_s) * down) / (2.0L * i);
    for (int n = 1; n < n0; ++n) sum += std::sin(half_pi_s + theta * static_cast<long double>(n)) * g(n);
    const Complex prefactor = std::pow(Complex(2.0), s) * std::pow(Complex(kPi), s - 1.0) * gamma(1.0 - s);
    return check_result(prefactor * static_cast<Complex>(sum), "hurwitz_fourier_sin_form");
  }
  throw ConvergenceError("hurwitz_fourier_sin_form: oscillatory tail did not meet tolerance");
}

Complex riemann_zeta(Complex s, int r, const EvalSettings& settings) {
  require_finite(s, "riemann_zeta");
  if (r != 0 && r != 1) throw DomainError("riemann_zeta supports r in {0, 1}");
  if (s.real() >= 0.0) return hurwitz_zeta(s, 1.0, r, settings);

  // zeta(s) = A(s) sin(pi s/2) zeta(1-s),  A(s) = (2 pi)^s / pi * Gamma(1-s)
  const Complex t = 1.0 - s;
  const Complex a = std::exp(s * kLog2Pi) / kPi * gamma(t);
  const Complex z = hurwitz_zeta(t, 1.0, 0, settings);
  const Complex sn = std::sin(kPi * s / 2.0);
  if (r == 0) return check_result(a * sn * z, "riemann_zeta");
  const Complex cs = std::cos(kPi * s / 2.0);
  const Complex dz = hurwitz_zeta(t, 1.0, 1, settings);
  return check_result(a * (sn * ((kLog2Pi - digamma(t)) * z - dz) + kPi / 2.0 * cs * z), "riemann_zeta");
}

ClosedForm zeta_even_closed(int N) {
  if (N < 2 || N % 2 != 0) throw DomainError("zeta_even_closed requires even N >= 2");
  return zeta_closed(N);
}

Complex zeta_prime_neg_even(int N) {
  if (N < 3 || N % 2 == 0) throw DomainError("zeta_prime_neg_even requires odd N >= 3");
  // zeta'(1-N) = zeta(N) (N-1)! (-1)^{(N-1)/2} / (2^N pi^{N-1})
  const double sign = ((N - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double scale = std::tgamma(static_cast<double>(N)) / (std::pow(2.0, N) * std::pow(kPi, N - 1));
  return sign * scale * riemann_zeta(Complex(N, 0.0), 0);
}

}  // namespace tornheim
