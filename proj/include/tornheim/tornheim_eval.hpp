#pragma once

// The Tornheim double series
//
//   T(s1, s2, s3) = sum_{m, n >= 1} m^{-s1} n^{-s2} (m + n)^{-s3}
//
// evaluated numerically, the double zeta value zeta_2(s1, s2) = T(s1, 0, s2),
// and exact closed forms at integer arguments.

#include <array>
#include <optional>
#include <vector>

#include "tornheim/closed_form.hpp"
#include "tornheim/special.hpp"

namespace tornheim {

struct TornheimArgs {
  Complex s1;
  Complex s2;
  Complex s3;

  /// Re(s2+s3) > 1, Re(s1+s3) > 1 and Re(s1+s2+s3) > 2.
  bool in_convergence_region() const;
};

/// The square m, n <= cutoff is summed directly; the three remaining pieces
/// are closed with Euler-Maclaurin (tail_terms Bernoulli corrections) in one
/// or both indices. The result at cutoff is compared with the result at
/// 2*cutoff; the cutoff keeps doubling up to max_cutoff until the two agree
/// to target_tol * max(1, |T|).
struct SummationSettings {
  int cutoff = 64;
  int max_cutoff = 4096;
  int tail_terms = 8;
  double target_tol = 1e-12;
};

/// Throws DomainError outside the convergence region and ConvergenceError
/// when the cutoff escalation does not settle.
Complex tornheim_numeric(const TornheimArgs& args, const SummationSettings& settings = {});

/// zeta_2(s1, s2) = sum_{k > m >= 1} m^{-s1} k^{-s2}, as a sum of Hurwitz
/// zeta tails over m. Requires Re s2 > 1 and Re(s1 + s2) > 2.
Complex double_zeta(Complex s1, Complex s2, const SummationSettings& settings = {});

/// coeff * T(i, 0, N - i).
struct HwzTerm {
  Rational coeff;
  std::array<int, 3> args;

  friend bool operator==(const HwzTerm&, const HwzTerm&) = default;
};

/// T(a, b, c) as a combination of T(i, 0, N - i), N = a + b + c, sorted by i.
std::vector<HwzTerm> hwz_reduce(int a, int b, int c);

/// T(2n, 2n, 2n) = rational * pi^{6n}, n >= 1.
ClosedForm diagonal_even_closed(int n);

/// T(2n+1, 2n+1, 2n+1), n >= 0.
ClosedForm diagonal_odd_closed(int n);

/// (-1)^{n3} T(n1,n2,n3) + (-1)^{n1-1} T(n2,n3,n1) + (-1)^{n2-1} T(n3,n1,n2)
/// for n1 + n2 + n3 odd.
ClosedForm alternating_combo_odd(int n1, int n2, int n3);

/// The same combination from tornheim_numeric.
Complex alternating_combo_numeric(int n1, int n2, int n3, const SummationSettings& settings = {});

/// zeta_2(n1, n2) for n1, n2 > 1 with n1 + n2 odd.
ClosedForm double_zeta_odd_closed(int n1, int n2);

/// zeta_2(n1, n2) for odd weight with n1 >= 1, n2 > 1. The case n1 = 1 uses
///   zeta_2(1, n) = (n/2) zeta(n+1) - (1/2) sum_{j=1}^{n-2} zeta(j+1) zeta(n-j).
ClosedForm double_zeta_closed(int n1, int n2);

/// Exact T(a, b, c) at nonnegative integers where a closed form in the
/// pi^p * zeta'(-k) basis is available: odd weight (through hwz_reduce),
/// even diagonals, and T(a, b, 0) with an even entry.
std::optional<ClosedForm> tornheim_closed(int a, int b, int c);

}  // namespace tornheim
