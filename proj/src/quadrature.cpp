#include "tornheim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <utility>

#include "tornheim/errors.hpp"

namespace tornheim {

namespace {

struct Rule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

Rule gauss_legendre(int n) {
  Rule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

Complex apply(const Rule& rule, const std::function<Complex(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

struct Panel {
  double a;
  double b;
  int depth;
  Complex value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

}  // namespace

QuadResult integrate_01(const std::function<Complex(double)>& f, const QuadSettings& settings) {
  if (settings.gauss_order < 2) throw DomainError("integrate_01: gauss_order must be >= 2");
  const Rule high = gauss_legendre(settings.gauss_order);
  const Rule low = gauss_legendre(settings.gauss_order / 2);

  const auto evaluate = [&](double a, double b, int depth) {
    const Complex hi = apply(high, f, a, b);
    const Complex lo = apply(low, f, a, b);
    return Panel{a, b, depth, hi, std::abs(hi - lo)};
  };

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> frozen;
  const int levels = std::max(1, settings.endpoint_levels);
  for (int k = levels; k >= 2; --k) {
    const double lo = std::ldexp(1.0, -k);
    const double hi = std::ldexp(1.0, -k + 1);
    open.push(evaluate(lo, hi, 0));
    open.push(evaluate(1.0 - hi, 1.0 - lo, 0));
  }
  open.push(evaluate(0.0, std::ldexp(1.0, -levels), 0));
  open.push(evaluate(1.0 - std::ldexp(1.0, -levels), 1.0, 0));

  const auto total_error = [&] {
    double e = 0.0;
    for (const auto& p : frozen) e += p.error;
    auto copy = open;
    while (!copy.empty()) {
      e += copy.top().error;
      copy.pop();
    }
    return e;
  };

  double err = total_error();
  while (err > settings.target_tol && !open.empty()) {
    Panel worst = open.top();
    open.pop();
    if (worst.depth >= settings.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate(worst.a, mid, worst.depth + 1);
    const Panel right = evaluate(mid, worst.b, worst.depth + 1);
    err += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
  }
  err = total_error();

  Complex value = 0.0;
  for (const auto& p : frozen) value += p.value;
  while (!open.empty()) {
    value += open.top().value;
    open.pop();
  }
  if (err > settings.target_tol) {
    throw ConvergenceError("integrate_01: tolerance not reached at max depth (estimate " + std::to_string(err) + ")");
  }
  return {value, err};
}

QuadResult alpha_product_integral(const IntegrandSpec& spec, const QuadSettings& quad, const EvalSettings& eval) {
  std::vector<std::pair<ZetaFactor, int>> unique;
  for (const auto& factor : spec.factors) {
    if (factor.s.real() >= 1.0) throw DomainError("alpha_product_integral requires Re s < 1 in every factor");
    if (factor.r != 0 && factor.r != 1) throw DomainError("alpha_product_integral supports r in {0, 1}");
    bool merged = false;
    for (auto& [u, count] : unique) {
      if (u == factor) {
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) unique.emplace_back(factor, 1);
  }
  const auto integrand = [&](double alpha) {
    Complex product = 1.0;
    for (const auto& [factor, count] : unique) {
      const Complex v = hurwitz_zeta(factor.s, factor.reflected ? 1.0 - alpha : alpha, factor.r, eval);
      for (int i = 0; i < count; ++i) product *= v;
    }
    return product;
  };
  return integrate_01(integrand, quad);
}

}  // namespace tornheim
