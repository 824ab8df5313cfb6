"""Named small graphs and seeded random corpora for verification campaigns.

Everything here is deterministic: random graphs come from a PCG64 generator
with a fixed or caller-supplied seed, so campaign reports are reproducible
byte for byte.
"""

from __future__ import annotations

import bisect

import numpy as np

from .graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    h_ln,
    path,
    pendant_attach,
    star,
)

__all__ = [
    "twin_gallery",
    "pendant_gallery",
    "stars_with_core",
    "erdos_renyi",
    "random_tree",
    "random_bipartite",
    "random_quasi_only",
    "random_pendant_with_core",
    "named_small_graphs",
    "standard_corpus",
    "quasi_only_corpus",
    "general_pendant_corpus",
    "CORPUS_ALPHAS",
]

# blend parameters exercised by the corpus campaigns
CORPUS_ALPHAS = (0.0, 0.25, 0.45, 0.55, 2.0 / 3.0, 0.8, 1.0)

DEFAULT_SEED = 90210


def twin_gallery() -> Graph:
    """20-vertex showcase with three false-twin classes (sizes 5, 3, 3) and
    two true-twin classes (sizes 2, 3); the degree-1 classes share no
    neighbors, so their bounds aggregate."""
    edges = [
        (0, 3), (1, 3), (2, 3),            # leaves on the first hub
        (3, 4), (3, 5), (3, 6),
        (4, 7), (5, 7), (6, 7),            # degree-2 false twins between hubs
        (7, 8), (7, 9), (7, 10),
        (8, 9), (9, 10), (8, 10),          # triangle of true twins
        (8, 11), (9, 11), (10, 11),
        (11, 12), (11, 13), (12, 13),      # adjacent pair of true twins
        (12, 14), (13, 14),
        (14, 15), (14, 16), (14, 17), (14, 18), (14, 19),  # five leaves
    ]
    return Graph.from_edges(20, edges, name="twin_gallery")


def pendant_gallery() -> Graph:
    """18-vertex showcase with p = 9, q = 5, r = 9 and a 4-vertex core."""
    edges = [
        (0, 1), (1, 14), (2, 3), (3, 16), (4, 6), (5, 6), (6, 16),
        (7, 9), (8, 9), (9, 13), (9, 15), (9, 17), (10, 13), (11, 13),
        (12, 13), (13, 15), (14, 15), (15, 17), (16, 17),
    ]
    return Graph.from_edges(18, edges, name="pendant_gallery")


def stars_with_core() -> Graph:
    """15-vertex showcase: three pendant stars (sizes 2, 3, 2) hanging off a
    5-vertex core, so the reduced matrix has order 15 + 3 - 7 = 11."""
    edges = [
        (0, 2), (1, 2), (2, 11), (11, 10), (10, 6), (6, 4), (6, 5), (6, 3),
        (2, 13), (13, 14), (14, 12), (13, 12), (11, 9), (9, 8), (9, 7), (12, 9),
    ]
    return Graph.from_edges(15, edges, name="stars_with_core")


# ---------------------------------------------------------------------------
# seeded random generators
# ---------------------------------------------------------------------------

def erdos_renyi(n: int, p: float, rng: np.random.Generator,
                name: str = "") -> Graph:
    """G(n, p) with independent edges; an edgeless draw gets the edge (0, 1)
    so every corpus graph has a spectrum worth studying."""
    if n < 2:
        raise ValueError("need n >= 2")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    if not edges:
        edges = [(0, 1)]
    return Graph.from_edges(n, edges, name=name or f"er{n}")


def random_tree(n: int, rng: np.random.Generator, name: str = "") -> Graph:
    """Uniform labeled tree via a random builder sequence."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return Graph.from_edges(2, [(0, 1)], name=name or "tree2")
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            # v becomes a leaf; keep the pool sorted for determinism
            bisect.insort(leaves, v)
    edges.append((leaves[0], leaves[1]))
    return Graph.from_edges(n, edges, name=name or f"tree{n}")


def random_bipartite(a: int, b: int, p: float, rng: np.random.Generator,
                     name: str = "") -> Graph:
    edges = [(i, a + j) for i in range(a) for j in range(b)
             if rng.random() < p]
    if not edges:
        edges = [(0, a)]
    return Graph.from_edges(a + b, edges, name=name or f"bip{a}_{b}")


def _random_connected(n: int, extra_p: float, rng: np.random.Generator) -> Graph:
    if n == 1:
        return Graph.from_edges(1, [])
    g = random_tree(n, rng)
    edges = set(g.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_quasi_only(rng: np.random.Generator, name: str = "",
                      max_n: int = 12) -> Graph:
    """Random graph whose internal vertices all root pendant stars."""
    q = int(rng.integers(1, 4))
    base = _random_connected(q, 0.5, rng)
    budget = max_n - q
    sizes = {}
    for i in range(q):
        hi = max(1, min(3, budget - (q - 1 - i)))
        s = int(rng.integers(1, hi + 1))
        sizes[i] = s
        budget -= s
    g = pendant_attach(base, sizes)
    return g.with_name(name or f"quasi{g.n}")


def random_pendant_with_core(rng: np.random.Generator, name: str = "",
                             max_n: int = 12) -> Graph:
    """Random pendant graph keeping a nonempty core: q star roots plus c
    extra internal vertices of degree >= 2 that receive no pendants."""
    q = int(rng.integers(1, 4))
    c = int(rng.integers(1, 4))
    if q + c < 3:
        c = 2  # a 2-vertex base cannot give its core vertex degree two
    r = q + c
    base = _random_connected(r, 0.4, rng)
    # core vertices are the last c; force their degree to at least 2
    edges = set(base.edges())
    for v in range(q, r):
        others = [u for u in range(r) if u != v and (min(u, v), max(u, v)) not in edges]
        while len([u for u in range(r) if (min(u, v), max(u, v)) in edges]) < 2 and others:
            pick = others[int(rng.integers(0, len(others)))]
            edges.add((min(pick, v), max(pick, v)))
            others.remove(pick)
    base = Graph.from_edges(r, sorted(edges))
    budget = max_n - r
    sizes = {}
    for i in range(q):
        hi = max(1, min(2, budget - (q - 1 - i)))
        s = int(rng.integers(1, hi + 1))
        sizes[i] = s
        budget -= s
    g = pendant_attach(base, sizes)
    return g.with_name(name or f"pend{g.n}")


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------

def named_small_graphs() -> list[Graph]:
    gs = [complete(n) for n in range(2, 7)]
    gs += [path(n) for n in range(2, 9)]
    gs += [cycle(n) for n in range(3, 9)]
    gs += [star(3), star(5), complete_bipartite(2, 3), complete_bipartite(3, 3),
           complete_bipartite(1, 4)]
    gs += [h_ln(3, 1), h_ln(4, 2), h_ln(6, 3), h_ln(5, 5)]
    gs += [twin_gallery(), pendant_gallery(), stars_with_core()]
    return gs


def standard_corpus(seed: int = DEFAULT_SEED, count: int = 200) -> list[Graph]:
    """Seeded random corpus mixing dense, sparse, bipartite, and pendant
    graphs, all of order at most 12."""
    rng = np.random.default_rng(seed)
    ps = (0.2, 0.35, 0.5, 0.65, 0.8)
    out: list[Graph] = []
    for i in range(count):
        kind = i % 5
        n = 4 + (i // 5) % 9
        if kind == 0:
            g = erdos_renyi(n, ps[(i // 5) % len(ps)], rng, name=f"corpus{i:03d}.er")
        elif kind == 1:
            g = random_tree(n, rng, name=f"corpus{i:03d}.tree")
        elif kind == 2:
            a = 2 + (i // 5) % 4
            b = 2 + (i // 7) % 5
            g = random_bipartite(a, b, 0.3 + 0.5 * rng.random(), rng,
                                 name=f"corpus{i:03d}.bip")
        elif kind == 3:
            g = random_quasi_only(rng, name=f"corpus{i:03d}.quasi")
        else:
            g = random_pendant_with_core(rng, name=f"corpus{i:03d}.pend")
        out.append(g)
    return out


def quasi_only_corpus(count: int = 20, seed: int = 4821) -> list[Graph]:
    rng = np.random.default_rng(seed)
    return [random_quasi_only(rng, name=f"quasi{i:02d}") for i in range(count)]


def general_pendant_corpus(count: int = 20, seed: int = 7713) -> list[Graph]:
    """Pendant graphs with a surviving core; the stars-with-core showcase is
    always the first member."""
    rng = np.random.default_rng(seed)
    out = [stars_with_core()]
    while len(out) < count:
        out.append(random_pendant_with_core(
            rng, name=f"pend{len(out):02d}"))
    return out
