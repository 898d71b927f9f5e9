#pragma once

// Exact reduction of int_0^1 P(alpha) * d^r/ds^r zeta(s0, alpha) d alpha for a
// rational polynomial P, an integer s0 <= 0 and r in {0, 1}.
//
// Integration by parts uses the alpha-antiderivatives
//   zeta(s, a)  = d/da [ zeta(s-1, a) / (1-s) ]
//   zeta'(s, a) = d/da [ zeta(s-1, a) / (1-s)^2 + zeta'(s-1, a) / (1-s) ]
// together with zeta^{(r)}(s, 0) = zeta^{(r)}(s, 1) = zeta^{(r)}(s) for
// s < 0 and the vanishing of int_0^1 zeta^{(r)}(s, a) da.

#include "tornheim/closed_form.hpp"
#include "tornheim/polynomial.hpp"
#include "tornheim/special.hpp"

namespace tornheim {

struct PolyZetaIntegrand {
  Polynomial poly;
  int s0 = 0;
  int r = 0;
};

/// Throws DomainError when s0 > 0 or r is not 0 or 1.
ClosedForm integrate_poly_zeta(const PolyZetaIntegrand& g);

/// int_0^1 zeta(1-n1, a) zeta(1-n2, a) zeta^{(r)}(1-n3, a) da, n_i >= 1.
ClosedForm integrate_zeta_product(int n1, int n2, int n3, int r);

/// Numeric value of a closed form. zeta'(-2m) uses zeta_prime_neg_even;
/// other zeta' arguments use riemann_zeta(m, 1).
Complex closedform_eval(const ClosedForm& c);

}  // namespace tornheim
