#pragma once

// Adaptive Gauss-Legendre integration over [0, 1] and the alpha-integrals of
// products of Hurwitz zeta factors built on it.

#include <functional>
#include <vector>

#include "tornheim/special.hpp"

namespace tornheim {

struct QuadSettings {
  int gauss_order = 20;
  /// Maximum number of bisections applied to any starting panel.
  int max_depth = 12;
  /// Starting panels are graded geometrically down to 2^-endpoint_levels
  /// at both ends.
  int endpoint_levels = 30;
  double target_tol = 1e-12;
};

struct QuadResult {
  Complex value;
  double error = 0.0;
};

/// Integrates f over (0, 1); f is never evaluated at the endpoints. The
/// error of each panel is |G_n - G_{n/2}|. Panels are refined worst-first
/// until the summed estimate meets target_tol; throws ConvergenceError when
/// every remaining panel has reached max_depth first.
QuadResult integrate_01(const std::function<Complex(double)>& f, const QuadSettings& settings = {});

/// One factor zeta^{(r)}(s, alpha), or zeta^{(r)}(s, 1 - alpha) when
/// reflected.
struct ZetaFactor {
  Complex s;
  int r = 0;
  bool reflected = false;

  friend bool operator==(const ZetaFactor&, const ZetaFactor&) = default;
};

struct IntegrandSpec {
  std::vector<ZetaFactor> factors;
};

/// int_0^1 prod_i zeta^{(r_i)}(s_i, alpha or 1 - alpha) d alpha.
/// Requires Re s_i < 1 for every factor. Repeated factors are evaluated once
/// per node.
QuadResult alpha_product_integral(const IntegrandSpec& spec, const QuadSettings& quad = {},
                                  const EvalSettings& eval = {});

}  // namespace tornheim
