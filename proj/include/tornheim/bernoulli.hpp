#pragma once

// Bernoulli numbers and polynomials, the polynomial values of the Hurwitz
// zeta function at nonpositive integers, and the exact integral over [0, 1]
// of a product of three such polynomials.

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "tornheim/polynomial.hpp"
#include "tornheim/rational.hpp"

namespace tornheim {

/// Memoized table B_0, B_1, ... computed from
///   sum_{k=0}^{n} C(n+1, k) B_k = 0,  B_0 = 1.
/// Readers take a shared lock; growing the table takes an exclusive one.
class BernoulliCache {
 public:
  Rational get(unsigned n);
  std::size_t size() const;

  static BernoulliCache& global();

 private:
  void extend_to(unsigned n);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> table_{Rational(1)};
};

Rational bernoulli_number(unsigned n);

/// B_n(alpha) = sum_i C(n, i) B_{n-i} alpha^i.
Polynomial bernoulli_polynomial(unsigned n);

/// zeta(-n, alpha) = -B_{n+1}(alpha) / (n + 1).
Polynomial hurwitz_neg_int_poly(unsigned n);

/// Exact value of zeta(-n) = -B_{n+1}(1) / (n + 1).
Rational zeta_neg_int(unsigned n);

/// int_0^1 zeta(1-n1, a) zeta(1-n2, a) zeta(1-n3, a) da from the closed
/// triple sum over binomials and Bernoulli numbers. Requires n_i >= 1.
Rational triple_bernoulli_integral(unsigned n1, unsigned n2, unsigned n3);

/// Same integral computed by multiplying the three polynomials and
/// integrating term by term; independent of the triple sum.
Rational triple_integral_by_polynomials(unsigned n1, unsigned n2, unsigned n3);

}  // namespace tornheim
