#include "tornheim/bernoulli.hpp"

#include <stdexcept>

namespace tornheim {

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

Rational BernoulliCache::get(unsigned n) {
  {
    std::shared_lock lock(mutex_);
    if (n < table_.size()) return table_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return table_[n];
}

void BernoulliCache::extend_to(unsigned n) {
  std::unique_lock lock(mutex_);
  for (unsigned m = static_cast<unsigned>(table_.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      table_.emplace_back(0);
      continue;
    }
    Rational acc;
    for (unsigned k = 0; k < m; ++k) {
      if (!table_[k].is_zero()) acc += binomial(m + 1, k) * table_[k];
    }
    table_.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
}

Rational bernoulli_number(unsigned n) { return BernoulliCache::global().get(n); }

Polynomial bernoulli_polynomial(unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  for (unsigned i = 0; i <= n; ++i) coeffs[i] = binomial(n, i) * bernoulli_number(n - i);
  return Polynomial(std::move(coeffs));
}

Polynomial hurwitz_neg_int_poly(unsigned n) {
  return bernoulli_polynomial(n + 1) * Rational(-1, static_cast<long>(n + 1));
}

Rational zeta_neg_int(unsigned n) {
  // B_{n+1}(1), which differs from B_{n+1} only at n = 0
  const Rational b = n == 0 ? Rational(1, 2) : bernoulli_number(n + 1);
  return -b / Rational(static_cast<long>(n + 1));
}

Rational triple_bernoulli_integral(unsigned n1, unsigned n2, unsigned n3) {
  if (n1 == 0 || n2 == 0 || n3 == 0) throw std::domain_error("triple_bernoulli_integral needs n_i >= 1");
  Rational acc;
  for (unsigned i = 0; i <= n1; ++i) {
    const Rational bi = binomial(n1, i) * bernoulli_number(n1 - i);
    if (bi.is_zero()) continue;
    for (unsigned j = 0; j <= n2; ++j) {
      const Rational bij = bi * binomial(n2, j) * bernoulli_number(n2 - j);
      if (bij.is_zero()) continue;
      for (unsigned k = 0; k <= n3; ++k) {
        const Rational bk = binomial(n3, k) * bernoulli_number(n3 - k);
        if (bk.is_zero()) continue;
        acc += bij * bk / Rational(static_cast<long>(i + j + k + 1));
      }
    }
  }
  return -acc / Rational(static_cast<long>(n1) * n2 * n3);
}

Rational triple_integral_by_polynomials(unsigned n1, unsigned n2, unsigned n3) {
  if (n1 == 0 || n2 == 0 || n3 == 0) throw std::domain_error("triple_integral_by_polynomials needs n_i >= 1");
  const Polynomial p = hurwitz_neg_int_poly(n1 - 1) * hurwitz_neg_int_poly(n2 - 1) * hurwitz_neg_int_poly(n3 - 1);
  return p.integrate_unit();
}

}  // namespace tornheim
