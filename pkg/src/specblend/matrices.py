"""Matrix families attached to a graph: adjacency/degree/Laplacian bases, the
convex adjacency-Laplacian blend and its companions, equitable quotients, and
the structured reductions that peel pendant stars off the spectrum."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, StructureError, StructureReport, Labeling, classify_vertices, build_labeling

__all__ = [
    "SymmetricMatrix",
    "ConsistencyError",
    "QuotientResult",
    "PendantReduction",
    "build_base",
    "blend_matrix",
    "degree_blend_matrix",
    "envelope_matrix",
    "quadratic_form",
    "quotient_matrix",
    "pendant_reduction",
    "block_det_identity_check",
]


class ConsistencyError(RuntimeError):
    """Two supposedly identical computation routes disagreed beyond tolerance."""


class SymmetricMatrix:
    """Dense real symmetric matrix with provenance (family tag, alpha, graph name).

    Construction requires entry-exact symmetry; matrices are built symmetric,
    never symmetrized after the fact.
    """

    __slots__ = ("data", "family", "alpha", "graph_name")

    def __init__(self, data, family: str = "", alpha: float | None = None,
                 graph_name: str | None = None):
        arr = np.array(data, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("matrix must be square")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix entries are not exactly symmetric")
        arr.setflags(write=False)
        self.data = arr
        self.family = family
        self.alpha = alpha
        self.graph_name = graph_name

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def inf_norm(self) -> float:
        return float(np.abs(self.data).sum(axis=1).max()) if self.n else 0.0

    def entry(self, i: int, j: int) -> float:
        return float(self.data[i, j])

    def dump(self) -> str:
        """Plain-text rows with %.12g entries, for golden-file comparison."""
        return "\n".join(" ".join("%.12g" % x for x in row) for row in self.data) + "\n"

    def __repr__(self) -> str:
        tag = self.family or "matrix"
        if self.alpha is not None:
            tag += f"(alpha={self.alpha!r})"
        if self.graph_name:
            tag += f" of {self.graph_name}"
        return f"<SymmetricMatrix {self.n}x{self.n} {tag}>"


def _adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def build_base(g: Graph, which: str) -> SymmetricMatrix:
    """One of the four integer base matrices: A, D, L = D - A, Q = D + A."""
    a = _adjacency(g)
    d = np.diag([float(x) for x in g.degrees()])
    mats = {"A": a, "D": d, "L": d - a, "Q": d + a}
    if which not in mats:
        raise ValueError("which must be one of 'A', 'D', 'L', 'Q'")
    return SymmetricMatrix(mats[which], family=which, graph_name=g.name)


def blend_matrix(g: Graph, alpha: float) -> SymmetricMatrix:
    """Convex blend of adjacency and Laplacian: alpha*A + (1-alpha)*L.

    Assembled directly as (1-alpha)*D + (2*alpha-1)*A: diagonal (1-alpha)*d(v),
    off-diagonal 2*alpha-1 on edges.  Values outside [0, 1] are permitted but
    flagged with a warning.
    """
    if not 0.0 <= alpha <= 1.0:
        warnings.warn(f"blend parameter alpha={alpha} outside [0, 1]", stacklevel=2)
    a = _adjacency(g)
    d = np.diag([(1.0 - alpha) * dv for dv in g.degrees()])
    return SymmetricMatrix(d + (2.0 * alpha - 1.0) * a, family="blend",
                           alpha=alpha, graph_name=g.name)


def degree_blend_matrix(g: Graph, alpha: float) -> SymmetricMatrix:
    """Degree-adjacency blend alpha*D + (1-alpha)*A (the nonnegative companion
    family whose spectrum bounds the main blend from below by negation)."""
    a = _adjacency(g)
    d = np.diag([alpha * float(dv) for dv in g.degrees()])
    return SymmetricMatrix(d + (1.0 - alpha) * a, family="degree_blend",
                           alpha=alpha, graph_name=g.name)


def envelope_matrix(g: Graph, alpha: float) -> SymmetricMatrix:
    """Positive-semidefinite envelope D + alpha*A linking the two blends:
    blend = envelope - degree_blend, entrywise."""
    a = _adjacency(g)
    d = np.diag([float(dv) for dv in g.degrees()])
    return SymmetricMatrix(d + alpha * a, family="envelope",
                           alpha=alpha, graph_name=g.name)


def quadratic_form(g: Graph, alpha: float, x) -> float:
    """x^T B x for the blend matrix, computed three ways and cross-checked.

    Routes: the dense bilinear form, the degree-sum form
    (1-a)*sum d(u)x_u^2 + 2(2a-1)*sum_E x_u x_v, and the per-edge form.
    Disagreement beyond 1e-10*(1 + ||B||_inf * ||x||^2) raises ConsistencyError.
    Returns the dense value.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match n={g.n}")
    b = blend_matrix(g, alpha)
    direct = float(x @ b.data @ x)
    deg = g.degrees()
    gamma = 2.0 * alpha - 1.0
    degree_sum = (1.0 - alpha) * sum(deg[u] * x[u] ** 2 for u in range(g.n))
    degree_sum += 2.0 * gamma * sum(x[u] * x[v] for u, v in g.edges())
    per_edge = sum((1.0 - alpha) * x[u] ** 2 + 2.0 * gamma * x[u] * x[v]
                   + (1.0 - alpha) * x[v] ** 2 for u, v in g.edges())
    tol = 1e-10 * (1.0 + b.inf_norm() * float(x @ x))
    worst = max(abs(direct - degree_sum), abs(direct - per_edge))
    if worst > tol:
        raise ConsistencyError(
            f"quadratic form routes disagree by {worst:.3e} (tol {tol:.3e})")
    return direct


# ---------------------------------------------------------------------------
# quotient matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientResult:
    """Blockwise average-row-sum matrix of a vertex partition.

    ``equitable`` is decided exactly from integer adjacency counts (every
    vertex of block i must see the same number of neighbors in block j, for
    all ordered pairs), which is independent of the blend parameter.
    """

    partition: tuple[tuple[int, ...], ...]
    matrix: np.ndarray
    equitable: bool


def quotient_matrix(m: SymmetricMatrix, partition, g: Graph) -> QuotientResult:
    """Quotient of ``m`` (built over ``g``) under a disjoint cover of 0..n-1."""
    blocks = tuple(tuple(sorted(b)) for b in partition)
    flat = [v for b in blocks for v in b]
    if sorted(flat) != list(range(g.n)) or m.n != g.n:
        raise ValueError("partition must cover 0..n-1 exactly once")
    t = len(blocks)
    q = np.zeros((t, t))
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            sub = m.data[np.ix_(bi, bj)]
            q[i, j] = sub.sum() / len(bi)
    equitable = True
    sets = [set(b) for b in blocks]
    for bi in blocks:
        for sj in sets:
            counts = {sum(1 for u in g.neighbors[v] if u in sj) for v in bi}
            if len(counts) > 1:
                equitable = False
                break
        if not equitable:
            break
    return QuotientResult(partition=blocks, matrix=q, equitable=equitable)


# ---------------------------------------------------------------------------
# pendant reductions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PendantReduction:
    """Reduced matrix whose roots, together with (1-alpha) repeated p-q times,
    reproduce the full blend spectrum.

    ``case`` is "quasi_only" (every internal vertex roots a star; reduced
    matrix has order 2q) or "general" (a nonempty core remains; reduced order
    is n + q - p).  ``core_blocks`` are the per-core-component matrices
    gamma*A(G_i) + (1-alpha)*D_i with degrees taken in the full graph.
    """

    case: str
    alpha: float
    c_blocks: tuple[np.ndarray, ...]
    reduced: SymmetricMatrix
    n_matrix: np.ndarray | None
    core_blocks: tuple[np.ndarray, ...]
    core_vertex_groups: tuple[tuple[int, ...], ...]
    pendant_excess: int  # p - q: multiplicity of the split-off eigenvalue

    @property
    def split_eigenvalue(self) -> float:
        return 1.0 - self.alpha


def pendant_reduction(g: Graph, alpha: float, report: StructureReport | None = None,
                      labeling: Labeling | None = None) -> PendantReduction:
    """Collapse each pendant star to a 2x2 block around its root.

    Block i is [[1-a, gamma*sqrt(s_i)], [gamma*sqrt(s_i), (1-a)d(v_i)]] with
    gamma = 2*alpha - 1; roots are coupled to each other and to the core by
    gamma on their second coordinate.  Requires at least one pendant vertex.
    """
    if report is None:
        report = classify_vertices(g)
    if labeling is None:
        labeling = build_labeling(g, report)
    if report.p == 0:
        raise StructureError("no pendant vertices")
    if any(s < 1 for s in report.star_sizes):
        raise StructureError("every quasi-pendant needs at least one pendant")
    gamma = 2.0 * alpha - 1.0
    roots = report.quasi_pendant
    q = report.q
    core = report.core
    c = len(core)
    order = 2 * q + c
    x = np.zeros((order, order))
    c_blocks = []
    for i, root in enumerate(roots):
        s = report.star_sizes[i]
        blk = np.array([
            [1.0 - alpha, gamma * math.sqrt(s)],
            [gamma * math.sqrt(s), (1.0 - alpha) * g.degree(root)],
        ])
        c_blocks.append(blk)
        x[2 * i: 2 * i + 2, 2 * i: 2 * i + 2] = blk
    for i, ri in enumerate(roots):
        for j, rj in enumerate(roots):
            if i < j and g.has_edge(ri, rj):
                x[2 * i + 1, 2 * j + 1] = x[2 * j + 1, 2 * i + 1] = gamma
    core_pos = {v: 2 * q + k for k, v in enumerate(core)}
    for i, ri in enumerate(roots):
        for v in core:
            if g.has_edge(ri, v):
                x[2 * i + 1, core_pos[v]] = x[core_pos[v], 2 * i + 1] = gamma
    for v in core:
        x[core_pos[v], core_pos[v]] = (1.0 - alpha) * g.degree(v)
    for a_i, u in enumerate(core):
        for v in core[a_i + 1:]:
            if g.has_edge(u, v):
                x[core_pos[u], core_pos[v]] = x[core_pos[v], core_pos[u]] = gamma

    case = "quasi_only" if c == 0 else "general"
    n_matrix = x[2 * q:, 2 * q:].copy() if c else None
    core_blocks = []
    for comp in report.core_component_sets:
        idx = [core_pos[v] for v in comp]
        core_blocks.append(x[np.ix_(idx, idx)].copy())
    reduced = SymmetricMatrix(x, family=f"pendant_reduction.{case}",
                              alpha=alpha, graph_name=g.name)
    return PendantReduction(
        case=case,
        alpha=alpha,
        c_blocks=tuple(c_blocks),
        reduced=reduced,
        n_matrix=n_matrix,
        core_blocks=tuple(core_blocks),
        core_vertex_groups=report.core_component_sets,
        pendant_excess=report.p - report.q,
    )


# ---------------------------------------------------------------------------
# block determinant identity
# ---------------------------------------------------------------------------

def block_det_identity_check(blocks, couplings, x: float = 0.0) -> bool:
    """Check the corner-coupled block determinant identity at evaluation point x.

    The assembled matrix places block M_i on the diagonal and couples blocks
    i != j only through entry (last row of i, last column of j) = mu[i, j];
    the identity equates det(x*I - assembled) with the m x m determinant whose
    diagonal holds det(x*I - M_i) and whose (i, j) entry is
    -mu[i, j] * det(x*I - M_j with last row and column removed), the deleted
    determinant taken as 1 for 1x1 blocks.  Returns agreement of both sides
    within 1e-8 * (1 + |lhs|).
    """
    mats = [np.asarray(b, dtype=float) for b in blocks]
    m = len(mats)
    mu = np.asarray(couplings, dtype=float)
    if mu.shape != (m, m):
        raise ValueError(f"couplings must be {m}x{m}")
    ks = []
    for b in mats:
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 1:
            raise ValueError("blocks must be square with k_i >= 1")
        ks.append(b.shape[0])
    total = sum(ks)
    offs = np.cumsum([0] + ks)
    big = np.zeros((total, total))
    for i, b in enumerate(mats):
        big[offs[i]:offs[i + 1], offs[i]:offs[i + 1]] = b
    for i in range(m):
        for j in range(m):
            if i != j:
                big[offs[i] + ks[i] - 1, offs[j] + ks[j] - 1] = mu[i, j]
    lhs = float(np.linalg.det(x * np.eye(total) - big))
    small = np.zeros((m, m))
    shifted = [x * np.eye(k) - b for k, b in zip(ks, mats)]
    for i in range(m):
        small[i, i] = np.linalg.det(shifted[i])
    for i in range(m):
        for j in range(m):
            if i != j:
                deleted = 1.0 if ks[j] == 1 else float(np.linalg.det(shifted[j][:-1, :-1]))
                small[i, j] = -mu[i, j] * deleted
    rhs = float(np.linalg.det(small))
    return abs(lhs - rhs) <= 1e-8 * (1.0 + abs(lhs))
