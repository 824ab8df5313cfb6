"""Structural eigenvalue results as executable predictor/checker pairs.

Each checker computes what the theory predicts for a graph (an eigenvalue, a
multiplicity bound, or a whole spectrum), measures the same quantity on a
certified eigendecomposition, and returns a TheoremVerdict.  Verdicts never
assert anything when their hypotheses fail; strict inequalities observed with
a gap below 1e-9 are reported INCONCLUSIVE rather than failed, since floating
point cannot certify strictness at zero gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .graphs import (
    Graph,
    StructureError,
    classify_vertices,
    core_components,
    h_ln,
    twin_partition,
)
from .matrices import (
    blend_matrix,
    build_base,
    degree_blend_matrix,
    pendant_reduction,
    quotient_matrix,
)
from .eigen import Spectrum, char_poly_eval, multiplicity_of, sym_eig

__all__ = [
    "PASS",
    "FAIL",
    "VACUOUS",
    "INCONCLUSIVE",
    "HypothesisError",
    "TheoremVerdict",
    "multiplicity_bounds",
    "exact_pendant_multiplicity",
    "nullity_decomposition",
    "star_block_charpoly_check",
    "edge_delete_compare",
    "edge_rotation_check",
    "convexity_concavity_check",
    "misc_identities_check",
    "hln_spectrum",
    "hln_partition",
    "hln_spectrum_check",
]

PASS = "PASS"
FAIL = "FAIL"
VACUOUS = "VACUOUS"
INCONCLUSIVE = "INCONCLUSIVE"

STRICT_GAP = 1e-9       # a strict inequality needs this much daylight to PASS
SLACK = 1e-9            # non-strict inequalities may undershoot by this much
MULT_TOL = 1e-6         # counting tolerance for integer multiplicity claims


class HypothesisError(ValueError):
    """A checker was invoked outside the hypotheses of its theorem."""


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one theorem check on one graph.

    ``gap`` is the margin by which the claim held (negative on failure);
    ``predicted``/``observed`` carry the quantities compared.  A verdict can
    PASS only when its hypotheses were satisfied.
    """

    theorem: str
    graph: str
    alpha: float | None
    status: str
    hypotheses_satisfied: bool
    predicted: Any
    observed: Any
    tolerance: float
    gap: float

    def __post_init__(self) -> None:
        if self.status == PASS and not self.hypotheses_satisfied:
            raise ValueError("a verdict cannot PASS with unmet hypotheses")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def report_line(self) -> str:
        a = "-" if self.alpha is None else "%.12g" % self.alpha
        return f"{self.theorem}\t{self.graph}\t{a}\t{self.status}\t{'%.12g' % self.gap}"


def _verdict(theorem, graph, alpha, status, predicted, observed, tol, gap,
             hypotheses=True):
    return TheoremVerdict(theorem=theorem, graph=graph, alpha=alpha, status=status,
                          hypotheses_satisfied=hypotheses, predicted=predicted,
                          observed=observed, tolerance=tol, gap=float(gap))


def _strict_status(gap: float) -> str:
    if gap > STRICT_GAP:
        return PASS
    if gap < -STRICT_GAP:
        return FAIL
    return INCONCLUSIVE


def _blend_spectrum(g: Graph, alpha: float) -> Spectrum:
    return sym_eig(blend_matrix(g, alpha))


# ---------------------------------------------------------------------------
# multiplicity lower bounds from vertex sets
# ---------------------------------------------------------------------------

def _twin_value(kind: str, d: int, alpha: float) -> float:
    if kind == "true":
        return d + 1 - alpha * (d + 2)
    return (1.0 - alpha) * d


def multiplicity_bounds(g: Graph, alpha: float, kind: str) -> list[TheoremVerdict]:
    """Lower bounds on eigenvalue multiplicities from structured vertex sets.

    kinds ``false_twins``/``independent_set`` use false-twin classes (shared
    open neighborhood, eigenvalue (1-a)d), ``true_twins``/``clique`` use
    true-twin classes (shared closed neighborhood, eigenvalue d+1-a(d+2)),
    and ``pendant`` uses the aggregate bound p - q at eigenvalue 1-a.
    Classes of equal degree whose neighborhoods are pairwise disjoint are
    aggregated into a single bound sum(|S_i|) - t.  Kinds with no qualifying
    sets return an empty list.
    """
    if kind not in ("independent_set", "clique", "true_twins", "false_twins", "pendant"):
        raise ValueError(f"unknown kind {kind!r}")
    gname = g.name or f"g{g.n}"
    if kind == "pendant":
        rep = classify_vertices(g)
        if rep.p == 0:
            return []
        spec = _blend_spectrum(g, alpha)
        bound = rep.p - rep.q
        value = 1.0 - alpha
        observed = multiplicity_of(spec, value, spec.group_tol)
        gap = observed - bound
        return [_verdict("multiplicity_bound.pendant", gname, alpha,
                         PASS if observed >= bound else FAIL,
                         {"value": value, "bound": bound}, observed,
                         spec.group_tol, gap)]

    twin_kind = "true" if kind in ("true_twins", "clique") else "false"
    classes = twin_partition(g, f"{twin_kind}_twins")
    if not classes:
        return []
    spec = _blend_spectrum(g, alpha)
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for cls in classes:
        by_degree.setdefault(g.degree(cls[0]), []).append(cls)

    def class_hood(cls):
        hood = set(g.neighbors[cls[0]])
        if twin_kind == "true":
            hood.add(cls[0])
        return hood

    verdicts = []
    for d in sorted(by_degree):
        group = by_degree[d]
        hoods = [class_hood(c) for c in group]
        disjoint = all(not (hoods[i] & hoods[j])
                       for i in range(len(group)) for j in range(i + 1, len(group)))
        batches = [group] if disjoint else [[c] for c in group]
        for batch in batches:
            bound = sum(len(c) for c in batch) - len(batch)
            value = _twin_value(twin_kind, d, alpha)
            observed = multiplicity_of(spec, value, spec.group_tol)
            gap = observed - bound
            verdicts.append(_verdict(
                f"multiplicity_bound.{kind}", gname, alpha,
                PASS if observed >= bound else FAIL,
                {"value": value, "bound": bound, "degree": d,
                 "classes": tuple(batch)},
                observed, spec.group_tol, gap))
    return verdicts


# ---------------------------------------------------------------------------
# exact pendant multiplicity via the star reduction
# ---------------------------------------------------------------------------

def exact_pendant_multiplicity(g: Graph, alpha: float,
                               tol: float = MULT_TOL) -> TheoremVerdict:
    """Exact multiplicity of 1-alpha: p - q plus the contribution of the core.

    The reduction theorems exclude alpha = 1/2 (the star coupling vanishes),
    so that value raises HypothesisError.  Requires at least one pendant.
    """
    rep = classify_vertices(g)
    if rep.p == 0:
        raise StructureError("no pendant vertices")
    if abs(alpha - 0.5) <= 1e-9:
        raise HypothesisError("alpha = 1/2 is excluded by the reduction theorems")
    red = pendant_reduction(g, alpha, rep)
    value = 1.0 - alpha
    predicted = rep.p - rep.q
    for blk in red.core_blocks:
        evs = np.linalg.eigvalsh(blk)
        predicted += int(np.sum(np.abs(evs - value) <= tol))
    spec = _blend_spectrum(g, alpha)
    observed = multiplicity_of(spec, value, tol)
    gap = observed - predicted
    return _verdict("pendant_multiplicity_exact", g.name or f"g{g.n}", alpha,
                    PASS if observed == predicted else FAIL,
                    predicted, observed, tol, gap)


def nullity_decomposition(g: Graph, tol: float = MULT_TOL) -> list[TheoremVerdict]:
    """Three integer identities tying pendant structure to classical spectra:
    adjacency nullity, multiplicity of 1 in the Laplacian, and multiplicity
    of 1 in the signless Laplacian, each equal to p - q plus per-core-component
    counts with degrees taken in the full graph.
    """
    rep = classify_vertices(g)
    if rep.p == 0:
        raise StructureError("no pendant vertices")
    comps = core_components(g, rep)
    gname = g.name or f"g{g.n}"
    base_excess = rep.p - rep.q

    def comp_matrices(comp):
        a = np.zeros((comp.graph.n, comp.graph.n))
        for u, v in comp.graph.edges():
            a[u, v] = a[v, u] = 1.0
        d = np.diag([float(x) for x in comp.degrees_in_g])
        return a, d

    items = []
    # adjacency nullity: blocks A(G_i) counted at 0
    pred = base_excess
    for comp in comps:
        a, _ = comp_matrices(comp)
        pred += int(np.sum(np.abs(np.linalg.eigvalsh(a)) <= tol))
    obs = multiplicity_of(sym_eig(build_base(g, "A")), 0.0, tol)
    items.append(("nullity.adjacency", pred, obs))
    # Laplacian at 1: blocks D_i - A(G_i)
    pred = base_excess
    for comp in comps:
        a, d = comp_matrices(comp)
        pred += int(np.sum(np.abs(np.linalg.eigvalsh(d - a) - 1.0) <= tol))
    obs = multiplicity_of(sym_eig(build_base(g, "L")), 1.0, tol)
    items.append(("nullity.laplacian_one", pred, obs))
    # signless Laplacian at 1: blocks (D_i + A(G_i))/3 counted at 1/3
    pred = base_excess
    for comp in comps:
        a, d = comp_matrices(comp)
        pred += int(np.sum(np.abs(np.linalg.eigvalsh((d + a) / 3.0) - 1.0 / 3.0) <= tol))
    obs = multiplicity_of(sym_eig(build_base(g, "Q")), 1.0, tol)
    items.append(("nullity.signless_one", pred, obs))

    return [_verdict(name, gname, None, PASS if p == o else FAIL, p, o, tol, o - p)
            for name, p, o in items]


# ---------------------------------------------------------------------------
# star block characteristic polynomial
# ---------------------------------------------------------------------------

def star_block_charpoly_check(s: int, d: float, alpha: float,
                              sample_points) -> TheoremVerdict:
    """The (s+1)-order star block has characteristic polynomial
    (x-(1-a))^(s-1) * ((x-(1-a)d)(x-(1-a)) - s(2a-1)^2); checked against the
    exact fraction-free determinant at each sample point."""
    if s < 1:
        raise ValueError("star size s must be >= 1")
    e = np.zeros((s + 1, s + 1))
    for i in range(s):
        e[i, i] = 1.0 - alpha
        e[i, s] = e[s, i] = 2.0 * alpha - 1.0
    e[s, s] = (1.0 - alpha) * d
    worst = 0.0
    ok = True
    for x in sample_points:
        lhs = char_poly_eval(e, float(x))
        rhs = (x - (1.0 - alpha)) ** (s - 1) * (
            (x - (1.0 - alpha) * d) * (x - (1.0 - alpha))
            - s * (2.0 * alpha - 1.0) ** 2)
        err = abs(lhs - rhs)
        tol = 1e-8 * (1.0 + abs(lhs))
        worst = max(worst, err - tol)
        if err > tol:
            ok = False
    return _verdict("star_block_charpoly", f"star_block(s={s},d={d})", alpha,
                    PASS if ok else FAIL, "closed-form charpoly",
                    "fraction-free determinant", 1e-8, -worst)


# ---------------------------------------------------------------------------
# edge perturbations
# ---------------------------------------------------------------------------

def edge_delete_compare(g: Graph, e: tuple[int, int],
                        alpha: float) -> list[TheoremVerdict]:
    """Behavior of the blend spectrum under removing one edge.

    Item one (alpha <= 2/3): every eigenvalue weakly drops, pointwise in the
    sorted order.  Item two (alpha > 1/2, connected graph): the top eigenvalue
    drops strictly.  Out-of-range alpha makes the corresponding item VACUOUS.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    gname = g.name or f"g{g.n}"
    sub = g.delete_edge(u, v)
    spec_g = _blend_spectrum(g, alpha)
    spec_sub = _blend_spectrum(sub, alpha)
    out = []
    if alpha <= 2.0 / 3.0:
        slack = float(np.min(spec_g.values - spec_sub.values))
        out.append(_verdict("edge_delete.monotone", gname, alpha,
                            PASS if slack >= -SLACK else FAIL,
                            "lambda_j(G) >= lambda_j(G-e)", slack, SLACK, slack))
    else:
        out.append(_verdict("edge_delete.monotone", gname, alpha, VACUOUS,
                            None, None, SLACK, 0.0, hypotheses=False))
    if alpha > 0.5 and g.is_connected():
        gap = spec_g.top - spec_sub.top
        out.append(_verdict("edge_delete.top_strict", gname, alpha,
                            _strict_status(gap), "lambda_1 strictly drops",
                            gap, STRICT_GAP, gap))
    else:
        out.append(_verdict("edge_delete.top_strict", gname, alpha, VACUOUS,
                            None, None, STRICT_GAP, 0.0, hypotheses=False))
    return out


def edge_rotation_check(g: Graph, u: int, v: int, w: int,
                        alpha: float) -> TheoremVerdict:
    """Rotating edge {u,v} to {u,w} raises the top eigenvalue when the top
    eigenvector orders the moved endpoints suitably.

    Needs {u,v} an edge, {u,w} a non-edge, u != w.  The eigenvector is
    sign-fixed (largest-magnitude entry positive); hypotheses additionally
    require x_u > 0 and either alpha < 1/2 with x_w <= x_v < 0 or
    alpha > 1/2 with 0 < x_v <= x_w.  At alpha = 1/2 the blend is half the
    degree matrix, so the check degenerates to comparing maximum degrees.
    """
    if u == w or not g.has_edge(u, v) or g.has_edge(u, w):
        raise ValueError("need edge {u,v}, non-edge {u,w}, and u != w")
    gname = g.name or f"g{g.n}"
    rotated = g.delete_edge(u, v).add_edge(u, w)
    if abs(alpha - 0.5) <= 1e-9:
        dg, dh = max(g.degrees()), max(rotated.degrees())
        lg = _blend_spectrum(g, alpha).top
        lh = _blend_spectrum(rotated, alpha).top
        want = (dh > dg) - (dh < dg)
        got = (lh > lg + STRICT_GAP) - (lh < lg - STRICT_GAP)
        return _verdict("edge_rotation.max_degree", gname, alpha,
                        PASS if want == got else FAIL,
                        {"degree_order": want}, {"eigen_order": got},
                        STRICT_GAP, lh - lg)
    spec = _blend_spectrum(g, alpha)
    x = spec.vectors[:, 0]
    if x[u] <= 0:
        return _verdict("edge_rotation.top_increase", gname, alpha, VACUOUS,
                        "x_u > 0", float(x[u]), STRICT_GAP, 0.0, hypotheses=False)
    if alpha < 0.5:
        hyp = x[w] <= x[v] < 0
    else:
        hyp = 0 < x[v] <= x[w]
    if not hyp:
        return _verdict("edge_rotation.top_increase", gname, alpha, VACUOUS,
                        "eigenvector ordering", (float(x[v]), float(x[w])),
                        STRICT_GAP, 0.0, hypotheses=False)
    gap = _blend_spectrum(rotated, alpha).top - spec.top
    return _verdict("edge_rotation.top_increase", gname, alpha,
                    _strict_status(gap), "lambda_1 strictly increases",
                    gap, STRICT_GAP, gap)


# ---------------------------------------------------------------------------
# eigencurve shape in alpha
# ---------------------------------------------------------------------------

def convexity_concavity_check(g: Graph, alpha_1: float, alpha_2: float,
                              t_grid) -> TheoremVerdict:
    """Midpoint checks: the top eigenvalue is convex and the bottom concave
    along the segment from alpha_1 to alpha_2."""
    if not 0.0 <= alpha_1 < alpha_2 <= 1.0:
        raise ValueError("need 0 <= alpha_1 < alpha_2 <= 1")
    gname = g.name or f"g{g.n}"
    s1 = _blend_spectrum(g, alpha_1)
    s2 = _blend_spectrum(g, alpha_2)
    worst = math.inf
    for t in t_grid:
        if not 0.0 <= t <= 1.0:
            raise ValueError("t grid must lie in [0, 1]")
        mid = _blend_spectrum(g, (1.0 - t) * alpha_1 + t * alpha_2)
        top_slack = (1.0 - t) * s1.top + t * s2.top - mid.top
        bot_slack = mid.bottom - ((1.0 - t) * s1.bottom + t * s2.bottom)
        worst = min(worst, top_slack, bot_slack)
    return _verdict("eigencurve.convexity", gname, None,
                    PASS if worst >= -SLACK else FAIL,
                    {"alpha_1": alpha_1, "alpha_2": alpha_2},
                    {"worst_slack": worst}, SLACK, worst)


# ---------------------------------------------------------------------------
# radius, companion bound, quotient containment
# ---------------------------------------------------------------------------

def misc_identities_check(g: Graph, alpha: float,
                          partition=None) -> list[TheoremVerdict]:
    """Grab bag of identities: (a) on connected graphs the spectral radius is
    the top eigenvalue; (b) the blend spectrum dominates the negated companion
    blend spectrum pointwise (indices aligned after negation, which is what
    the positive-semidefinite envelope argument gives); (c) when an equitable
    partition is supplied, the quotient spectrum embeds in the full one."""
    gname = g.name or f"g{g.n}"
    spec = _blend_spectrum(g, alpha)
    out = []
    if g.is_connected():
        gap = spec.top - abs(spec.bottom)
        out.append(_verdict("spectral_radius.top", gname, alpha,
                            PASS if gap >= -SLACK else FAIL,
                            "rho == lambda_1", {"lambda_1": spec.top,
                                                "abs_lambda_n": abs(spec.bottom)},
                            SLACK, gap))
    else:
        out.append(_verdict("spectral_radius.top", gname, alpha, VACUOUS,
                            None, None, SLACK, 0.0, hypotheses=False))
    companion = sym_eig(degree_blend_matrix(g, alpha))
    negated_desc = -companion.values[::-1]
    slack = float(np.min(spec.values - negated_desc))
    out.append(_verdict("companion_blend.lower_bound", gname, alpha,
                        PASS if slack >= -SLACK else FAIL,
                        "lambda_k(blend) >= lambda_k(-companion)", slack,
                        SLACK, slack))
    if partition is not None:
        qr = quotient_matrix(blend_matrix(g, alpha), partition, g)
        if not qr.equitable:
            out.append(_verdict("quotient.containment", gname, alpha, VACUOUS,
                                "partition not equitable", None, 1e-7, 0.0,
                                hypotheses=False))
        else:
            qev = np.linalg.eigvals(qr.matrix)
            worst = 0.0
            for z in qev:
                worst = max(worst, abs(z.imag))
                worst = max(worst, float(np.min(np.abs(spec.values - z.real))))
            out.append(_verdict("quotient.containment", gname, alpha,
                                PASS if worst <= 1e-7 else FAIL,
                                "sigma(quotient) within sigma(full)", worst,
                                1e-7, 1e-7 - worst))
    return out


# ---------------------------------------------------------------------------
# the two-clique family
# ---------------------------------------------------------------------------

def hln_spectrum(n: int, ell: int, alpha: float) -> tuple[tuple[float, int], ...]:
    """Closed-form blend spectrum of the graph made of two K_n copies joined
    by ell matching edges; total multiplicity is 2n.  Parts with zero
    multiplicity are omitted."""
    if n < 3 or not 1 <= ell <= n:
        raise ValueError("need n >= 3 and 1 <= ell <= n")
    gamma = 2.0 * alpha - 1.0
    parts: list[tuple[float, int]] = []
    if ell < n:
        disc_a = gamma * (4 * alpha * ell - 2 * alpha * n) + n * n * gamma * gamma \
            + alpha * alpha
        root_a = math.sqrt(max(disc_a, 0.0))
        disc_b = gamma * ((3 * alpha - 2) * (2 * n - 4 * ell) + n * n * gamma) \
            + (3 * alpha - 2) ** 2
        root_b = math.sqrt(max(disc_b, 0.0))
        parts = [
            (n - alpha * (n + 1), 2 * n - 2 * ell - 2),
            (n + 2 - alpha * (n + 4), ell - 1),
            (n - alpha * n, ell - 1),
            (0.5 * (n - alpha - root_a), 1),
            (0.5 * (n - alpha + root_a), 1),
            (0.5 * (n - 5 * alpha + 2 - root_b), 1),
            (0.5 * (n - 5 * alpha + 2 + root_b), 1),
        ]
    else:
        parts = [
            (n * alpha, 1),
            (2 + alpha * (n - 4), 1),
            (n + 2 - alpha * (n + 4), n - 1),
            (n - alpha * n, n - 1),
        ]
    parts = [(float(v), m) for v, m in parts if m > 0]
    assert sum(m for _, m in parts) == 2 * n
    return tuple(parts)


def hln_partition(n: int, ell: int) -> tuple[tuple[int, ...], ...]:
    """Equitable 4-block partition of the two-clique family under the
    generator's labeling: matched/unmatched vertices of each copy.  Empty
    blocks (ell = n) are dropped."""
    blocks = [
        tuple(range(ell, n)),
        tuple(range(0, ell)),
        tuple(range(n, n + ell)),
        tuple(range(n + ell, 2 * n)),
    ]
    return tuple(b for b in blocks if b)


def hln_spectrum_check(n: int, ell: int, alpha: float,
                       tol: float = 1e-7) -> TheoremVerdict:
    """Closed-form spectrum against a certified eigensolve of the generated
    graph, compared as sorted multisets."""
    g = h_ln(n, ell)
    spec = _blend_spectrum(g, alpha)
    expanded = np.sort(np.concatenate(
        [np.full(m, v) for v, m in hln_spectrum(n, ell, alpha)]))[::-1]
    worst = float(np.max(np.abs(spec.values - expanded)))
    return _verdict("hln.spectrum_closed_form", g.name, alpha,
                    PASS if worst <= tol else FAIL,
                    "closed-form multiset", worst, tol, tol - worst)
