#pragma once

// Double-precision complex evaluation of the gamma function, the Hurwitz and
// Riemann zeta functions and their first s-derivatives.

#include <complex>

#include "tornheim/closed_form.hpp"

namespace tornheim {

using Complex = std::complex<double>;

/// Euler-Maclaurin controls. The head length is chosen as the smallest value
/// (up to shift_terms) for which the Bernoulli tail meets target_tol; keeping
/// the head short avoids cancellation for Re s < 0.
struct EvalSettings {
  int shift_terms = 200;
  int correction_terms = 25;
  double target_tol = 1e-15;
};

/// Controls for the Fourier-series evaluator. The series is summed directly
/// up to `cutoff` and the remaining oscillatory tail is accelerated with an
/// Euler transform of at most `transform_terms` forward differences.
struct FourierSettings {
  int cutoff = 256;
  int max_cutoff = 1 << 16;
  int transform_terms = 48;
  double target_tol = 1e-13;
};

/// Lanczos approximation with reflection for Re z < 1/2.
Complex gamma(Complex z);

Complex digamma(Complex z);

/// d^r/ds^r zeta(s, alpha) for r in {0, 1}, alpha > 0, by Euler-Maclaurin
/// summation. Every term is differentiated analytically for r = 1.
Complex hurwitz_zeta(Complex s, double alpha, int r = 0, const EvalSettings& settings = {});

/// Same value from the Fourier expansion in alpha
///   Gamma(1-s) * sum_{|n|>=1} e^{2 pi i n alpha} (2 pi i n)^{s-1}
/// (principal logarithm), differentiated term-wise for r = 1.
/// Requires Re s < 1 and 0 < alpha < 1.
Complex hurwitz_fourier(Complex s, double alpha, int r = 0, const FourierSettings& settings = {});

/// r = 0 value from the real sine form
///   2^s pi^{s-1} Gamma(1-s) sum_{n>=1} sin(pi s/2 + 2 pi n alpha) n^{s-1}.
Complex hurwitz_fourier_sin_form(Complex s, double alpha, const FourierSettings& settings = {});

/// d^r/ds^r zeta(s). For Re s < 0 the reflection formula (and its
/// s-derivative) is used; otherwise this is hurwitz_zeta(s, 1, r).
Complex riemann_zeta(Complex s, int r = 0, const EvalSettings& settings = {});

/// zeta(N) = rational * pi^N for even N >= 2.
ClosedForm zeta_even_closed(int N);

/// zeta'(1 - N) for odd N >= 3, from zeta(N).
Complex zeta_prime_neg_even(int N);

}  // namespace tornheim
