"""Tornheim double zeta values: numeric evaluation, exact closed forms and identity checks."""

import json as _json

from ._tornheim import (
    ClosedForm,
    ConvergenceError,
    DomainError,
    PoleError,
    alpha_integral,
    alternating_combo_odd,
    bernoulli,
    bernoulli_poly,
    diagonal_even_closed,
    diagonal_odd_closed,
    double_zeta,
    double_zeta_odd_closed,
    gamma,
    hurwitz_zeta,
    hwz_reduce,
    integrate_zeta_product,
    riemann_zeta,
    suite_ids,
    tornheim,
    tornheim_closed,
)
from ._tornheim import verify as _verify


def verify(suite="all", seed=0, tol=None):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(_verify(suite, seed, tol))


__all__ = [
    "ClosedForm",
    "ConvergenceError",
    "DomainError",
    "PoleError",
    "alpha_integral",
    "alternating_combo_odd",
    "bernoulli",
    "bernoulli_poly",
    "diagonal_even_closed",
    "diagonal_odd_closed",
    "double_zeta",
    "double_zeta_odd_closed",
    "gamma",
    "hurwitz_zeta",
    "hwz_reduce",
    "integrate_zeta_product",
    "riemann_zeta",
    "suite_ids",
    "tornheim",
    "tornheim_closed",
    "verify",
]
