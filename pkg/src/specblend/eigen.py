"""Residual-certified symmetric eigendecomposition, tolerance-grouped spectra,
and an exact fraction-free characteristic polynomial for small matrices used
as an independent cross-check of the floating-point solver."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrices import SymmetricMatrix

__all__ = [
    "EigenError",
    "Spectrum",
    "sym_eig",
    "multiplicity_of",
    "char_poly_eval",
    "rayleigh",
    "default_group_tol",
]

CHAR_POLY_MAX_ORDER = 12


class EigenError(RuntimeError):
    """Eigendecomposition failed its residual, orthogonality, or trace certificate."""


def _as_array(m) -> np.ndarray:
    if isinstance(m, SymmetricMatrix):
        return m.data
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    return arr


def default_group_tol(inf_norm: float) -> float:
    """Grouping tolerance 1e-7*(1 + ||M||_inf): wide enough to merge equal
    eigenvalues reached by different computation routes, narrow enough to keep
    the distinct roots of the small reduced blocks apart on the tested grids."""
    return 1e-7 * (1.0 + inf_norm)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing with matched orthonormal eigenvectors.

    ``groups`` lists (representative value, multiplicity) for runs of
    consecutive eigenvalues lying within ``group_tol`` of each other.
    """

    values: np.ndarray
    vectors: np.ndarray
    group_tol: float
    groups: tuple[tuple[float, int], ...]
    source_norm: float

    @property
    def n(self) -> int:
        return len(self.values)

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        if tol is None:
            tol = self.group_tol
        return multiplicity_of(self, value, tol)

    @property
    def top(self) -> float:
        return float(self.values[0])

    @property
    def bottom(self) -> float:
        return float(self.values[-1])


def _group(values: np.ndarray, tol: float) -> tuple[tuple[float, int], ...]:
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > tol:
            chunk = values[start:i]
            groups.append((float(chunk.mean()), len(chunk)))
            start = i
    return tuple(groups)


def sym_eig(m, tol: float = 1e-11, group_tol: float | None = None) -> Spectrum:
    """Certified eigendecomposition of a symmetric matrix.

    Every pair (lambda, v) must satisfy ||M v - lambda v||_2 <= tol*n*(1+||M||_inf)
    and the eigenvector matrix must be orthonormal to 1e-9; violations raise
    EigenError with the worst residual.  Sorting is non-increasing; each
    eigenvector is sign-fixed so its largest-magnitude entry is positive, and
    exact eigenvalue ties are broken by lexicographic eigenvector order so
    repeated runs emit identical output.
    """
    a = _as_array(m)
    n = a.shape[0]
    inf_norm = float(np.abs(a).sum(axis=1).max()) if n else 0.0
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise EigenError(f"eigensolver did not converge: {exc}") from exc
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    for k in range(n):
        col = v[:, k]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0:
            v[:, k] = -col
    # exact ties: reorder those columns lexicographically for reproducibility
    k = 0
    while k < n:
        j = k
        while j + 1 < n and w[j + 1] == w[k]:
            j += 1
        if j > k:
            cols = sorted(range(k, j + 1), key=lambda c: tuple(v[:, c]))
            v[:, k:j + 1] = v[:, cols]
        k = j + 1

    resid = a @ v - v * w
    worst = float(np.sqrt((resid ** 2).sum(axis=0)).max()) if n else 0.0
    bound = tol * n * (1.0 + inf_norm)
    if worst > bound:
        raise EigenError(f"residual {worst:.3e} exceeds certificate {bound:.3e}")
    ortho = float(np.abs(v.T @ v - np.eye(n)).max()) if n else 0.0
    if ortho > 1e-9:
        raise EigenError(f"eigenvectors not orthonormal: deviation {ortho:.3e}")
    trace = float(np.trace(a))
    if abs(float(w.sum()) - trace) > 1e-9 * (1.0 + abs(trace)):
        raise EigenError("eigenvalue sum disagrees with trace")
    gt = default_group_tol(inf_norm) if group_tol is None else group_tol
    w.setflags(write=False)
    v.setflags(write=False)
    return Spectrum(values=w, vectors=v, group_tol=gt,
                    groups=_group(w, gt), source_norm=inf_norm)


def multiplicity_of(s: Spectrum, value: float, tol: float) -> int:
    """Number of eigenvalues within tol of value (monotone in tol)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return int(np.sum(np.abs(s.values - value) <= tol))


def char_poly_eval(m, x: float) -> float:
    """det(x*I - M) by fraction-free Bareiss elimination over exact rationals.

    Every float input converts exactly to a rational, so the result is
    sign-exact; intended as a small-matrix oracle (order <= 12).
    """
    a = _as_array(m)
    n = a.shape[0]
    if n > CHAR_POLY_MAX_ORDER:
        raise ValueError(f"char_poly_eval capped at order {CHAR_POLY_MAX_ORDER}, got {n}")
    xf = Fraction(x)
    work = [[(xf if i == j else Fraction(0)) - Fraction(float(a[i, j]))
             for j in range(n)] for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if work[r][k] != 0), None)
            if pivot is None:
                return 0.0
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) / prev
            work[i][k] = Fraction(0)
        prev = work[k][k]
    det = sign * work[n - 1][n - 1]
    return float(det)


def rayleigh(m, x) -> float:
    """Rayleigh quotient x^T M x / x^T x; always lies in [lambda_n, lambda_1]."""
    a = _as_array(m)
    vec = np.asarray(x, dtype=float)
    denom = float(vec @ vec)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient undefined for the zero vector")
    return float(vec @ a @ vec) / denom
