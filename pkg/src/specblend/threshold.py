"""Positive-semidefiniteness thresholds of the two blend families.

The main blend alpha*A + (1-alpha)*L stays positive semidefinite up to a
graph-dependent threshold beta0 in [2/3, 1); the companion blend
alpha*D + (1-alpha)*A becomes positive semidefinite from alpha0 in (0, 1/2]
onward.  Their gap epsilon = beta0 - alpha0 is at least 1/6, with equality
exactly on bipartite graphs.  Bisection exploits concavity of the bottom
eigencurve (unique sign change on [2/3, 1]) and monotonicity for the
companion family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph
from .matrices import blend_matrix, degree_blend_matrix
from .eigen import EigenError, sym_eig

__all__ = [
    "ThresholdReport",
    "lambda_min_curve",
    "beta0",
    "alpha0",
    "epsilon_gap",
    "threshold_report",
    "closed_forms",
    "hln1_formula_consistency",
]

BETA0_CERT = 1e-7   # |lambda_min| certificate at the returned threshold
_MAX_ITER = 200


@dataclass(frozen=True)
class ThresholdReport:
    """Both thresholds with their gap, provenance, brackets and tolerances."""

    graph: str
    beta0: float
    alpha0: float
    epsilon: float
    method_beta0: str
    method_alpha0: str
    bracket_beta0: tuple[float, float]
    bracket_alpha0: tuple[float, float]
    iterations_beta0: int
    iterations_alpha0: int
    tol: float
    lambda_min_at_beta0: float

    def csv_row(self) -> str:
        vals = [self.graph, repr(self.beta0), repr(self.alpha0),
                repr(self.epsilon), self.method_beta0,
                str(self.iterations_beta0), repr(self.tol)]
        return ",".join(vals)


def _lambda_min_blend(g: Graph, alpha: float) -> float:
    return sym_eig(blend_matrix(g, alpha)).bottom


def _lambda_min_companion(g: Graph, alpha: float) -> float:
    return sym_eig(degree_blend_matrix(g, alpha)).bottom


def lambda_min_curve(g: Graph, alpha_grid) -> list[tuple[float, float]]:
    """Bottom eigenvalue of the blend at each grid point (grid within [0,1])."""
    out = []
    for a in alpha_grid:
        if not 0.0 <= a <= 1.0:
            raise ValueError("alpha grid must lie within [0, 1]")
        out.append((float(a), _lambda_min_blend(g, a)))
    return out


def _noise_floor(g: Graph) -> float:
    # entries of any blend are bounded by twice the max degree
    dmax = max(g.degrees()) if g.n else 0
    return 1e-12 * (1.0 + 2.0 * dmax)


def _beta0_bisect(g: Graph, tol: float) -> tuple[float, tuple[float, float], int]:
    lo, hi = 2.0 / 3.0, 1.0
    zeta = _noise_floor(g)
    if _lambda_min_blend(g, lo) < -zeta:
        raise EigenError("blend at 2/3 should be positive semidefinite")
    if _lambda_min_blend(g, hi) >= -zeta:
        raise EigenError("blend at 1 should have a negative eigenvalue")
    iters = 0
    while hi - lo > tol and iters < _MAX_ITER:
        mid = 0.5 * (lo + hi)
        if _lambda_min_blend(g, mid) >= -zeta:
            lo = mid
        else:
            hi = mid
        iters += 1
    return 0.5 * (lo + hi), (lo, hi), iters


def _alpha0_bisect(g: Graph, tol: float) -> tuple[float, tuple[float, float], int]:
    lo, hi = 0.0, 0.5
    zeta = _noise_floor(g)
    if _lambda_min_companion(g, lo) >= -zeta:
        raise EigenError("companion blend at 0 should have a negative eigenvalue")
    if _lambda_min_companion(g, hi) < -zeta:
        raise EigenError("companion blend at 1/2 should be positive semidefinite")
    iters = 0
    while hi - lo > tol and iters < _MAX_ITER:
        mid = 0.5 * (lo + hi)
        if _lambda_min_companion(g, mid) >= -zeta:
            hi = mid
        else:
            lo = mid
        iters += 1
    return 0.5 * (lo + hi), (lo, hi), iters


def beta0(g: Graph, tol: float = 1e-10) -> float:
    """Largest blend parameter keeping the main blend positive semidefinite.

    Bisection on [2/3, 1]; edgeless graphs return 1.0 by convention (their
    bottom eigencurve is identically zero).
    """
    if g.m == 0:
        return 1.0
    value, _, _ = _beta0_bisect(g, tol)
    cert = abs(_lambda_min_blend(g, value))
    if cert > BETA0_CERT:
        raise EigenError(f"threshold certificate failed: |lambda_min| = {cert:.3e}")
    return value


def alpha0(g: Graph, tol: float = 1e-10) -> float:
    """Smallest blend parameter making the companion blend positive
    semidefinite.  Bisection on [0, 1/2]; edgeless graphs return 0.0."""
    if g.m == 0:
        return 0.0
    value, _, _ = _alpha0_bisect(g, tol)
    return value


def epsilon_gap(g: Graph, tol: float = 1e-10) -> float:
    """Gap beta0 - alpha0; equals 1/6 exactly on bipartite graphs."""
    return beta0(g, tol) - alpha0(g, tol)


def threshold_report(g: Graph, tol: float = 1e-10) -> ThresholdReport:
    """Compute both thresholds by bisection and package them with provenance."""
    gname = g.name or f"g{g.n}"
    if g.m == 0:
        return ThresholdReport(
            graph=gname, beta0=1.0, alpha0=0.0, epsilon=1.0,
            method_beta0="definitional", method_alpha0="definitional",
            bracket_beta0=(1.0, 1.0), bracket_alpha0=(0.0, 0.0),
            iterations_beta0=0, iterations_alpha0=0, tol=tol,
            lambda_min_at_beta0=0.0)
    b, bb, ib = _beta0_bisect(g, tol)
    a, ba, ia = _alpha0_bisect(g, tol)
    lam = _lambda_min_blend(g, b)
    if abs(lam) > BETA0_CERT:
        raise EigenError(f"threshold certificate failed: |lambda_min| = {abs(lam):.3e}")
    return ThresholdReport(
        graph=gname, beta0=b, alpha0=a, epsilon=b - a,
        method_beta0="bisection", method_alpha0="bisection",
        bracket_beta0=bb, bracket_alpha0=ba,
        iterations_beta0=ib, iterations_alpha0=ia, tol=tol,
        lambda_min_at_beta0=lam)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _hln_beta0(n: int, ell: int) -> float:
    if ell >= 2:
        return (n + 2) / (n + 4)
    disc = n**4 + 2 * n**3 - 9 * n**2 + 6 * n + 1
    return (n * n + n - 9 + math.sqrt(disc)) / (2 * (n * n + 3 * n - 10))


def _hln_alpha0(n: int, ell: int) -> float:
    if ell >= 2:
        return 2 / (n + 2)
    disc = n * (n - 1) * (n * n + 3 * n - 6) + 1
    return (-n * n - n + 5 + math.sqrt(disc)) / 4


def _hln_epsilon(n: int, ell: int) -> float:
    if ell >= 2:
        return n / (n + 4) - 4 / ((n + 4) * (n + 2))
    disc = n**4 + 2 * n**3 - 9 * n**2 + 6 * n + 1
    return (n * n + n - 3) / 4 + (
        2 - 4 * n + (12 - n * n - 3 * n) * math.sqrt(disc)
    ) / (4 * (n + 5) * (n - 2))


def closed_forms(family: str, **params) -> ThresholdReport:
    """Printed threshold formulas for the solved families.

    ``complete`` (param n >= 2): beta0 = n/(n+1), alpha0 = 1/n.
    ``bipartite`` (no params): beta0 = 2/3, alpha0 = 1/2, epsilon = 1/6.
    ``h_ln`` (params n >= 3, ell in 1..n): the two-clique family; ell = 1 has
    its own radical formulas, ell >= 2 the rational ones.
    """
    if family == "complete":
        n = params["n"]
        if n < 2:
            raise ValueError("complete family needs n >= 2")
        b, a = n / (n + 1), 1 / n
        gname = f"K{n}"
    elif family == "bipartite":
        b, a = 2 / 3, 1 / 2
        gname = params.get("graph_name", "bipartite")
    elif family == "h_ln":
        n, ell = params["n"], params["ell"]
        if n < 3 or not 1 <= ell <= n:
            raise ValueError("h_ln family needs n >= 3 and 1 <= ell <= n")
        b, a = _hln_beta0(n, ell), _hln_alpha0(n, ell)
        gname = f"H{n}_{ell}"
    else:
        raise ValueError(f"no closed forms for family {family!r}")
    eps = _hln_epsilon(params["n"], params["ell"]) if family == "h_ln" else b - a
    return ThresholdReport(
        graph=gname, beta0=b, alpha0=a, epsilon=eps,
        method_beta0="closed_form", method_alpha0="closed_form",
        bracket_beta0=(b, b), bracket_alpha0=(a, a),
        iterations_beta0=0, iterations_alpha0=0, tol=0.0,
        lambda_min_at_beta0=0.0)


def hln1_formula_consistency(n: int) -> float:
    """Cross-check of the three printed ell = 1 formulas: returns
    |beta0 - alpha0 - epsilon| evaluated from the closed forms.  A value
    beyond 1e-6 would indicate the printed formulas disagree with each other
    and is surfaced by the verification campaigns rather than reconciled."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return abs(_hln_beta0(n, 1) - _hln_alpha0(n, 1) - _hln_epsilon(n, 1))
