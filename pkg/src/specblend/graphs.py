"""Simple undirected graphs: edge-list parsing, family generators, and
detection of the vertex structures (pendant stars, twins, bipartitions,
core components) that drive the multiplicity results."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

__all__ = [
    "Graph",
    "GraphParseError",
    "StructureError",
    "StructureReport",
    "Labeling",
    "CoreComponent",
    "parse_edge_list",
    "render_edge_list",
    "generate",
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "h_ln",
    "pendant_attach",
    "classify_vertices",
    "twin_partition",
    "bipartition",
    "core_components",
    "build_labeling",
]


class GraphParseError(ValueError):
    """Malformed edge-list input; the message names the offending 1-based line."""


class StructureError(ValueError):
    """A structural precondition does not hold (e.g. a reduction needs pendants)."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``neighbors[v]`` is the sorted tuple of vertices adjacent to ``v``.
    The optional ``name`` labels the graph in reports and never affects equality.
    """

    n: int
    neighbors: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.neighbors) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, adj in enumerate(self.neighbors):
            if list(adj) != sorted(set(adj)):
                raise ValueError(f"adjacency of vertex {v} not sorted/deduplicated")
            for u in adj:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.neighbors[u]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges, name: str = "") -> "Graph":
        adj: list[set[int]] = [set() for _ in range(max(n, 1))]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in adj), name)

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.neighbors) // 2

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def with_name(self, name: str) -> "Graph":
        return replace(self, name=name)

    # -- derived graphs --------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        edges = [e for e in self.edges() if e != (min(u, v), max(u, v))]
        return Graph.from_edges(self.n, edges, name=f"{self.name}-e({u},{v})")

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u},{v})")
        return Graph.from_edges(self.n, self.edges() + [(u, v)],
                                name=f"{self.name}+e({u},{v})")

    def induced(self, vertices) -> "Graph":
        """Induced subgraph, relabeled 0..k-1 by ascending original id."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph.from_edges(len(keep), edges)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            stack, comp = [root], []
            seen[root] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.neighbors[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) == 1


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse the canonical edge-list format: first line ``n m``, then m lines ``u v``.

    Duplicate edge lines collapse to one edge.  Raises GraphParseError naming
    the 1-based line number of the first malformed, out-of-range, or self-loop
    line.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not rows:
        raise GraphParseError("line 1: empty input, expected header 'n m'")
    header_no, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError(f"line {header_no}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"line {header_no}: non-integer header {header!r}") from None
    if n < 1 or m < 0:
        raise GraphParseError(f"line {header_no}: invalid sizes n={n}, m={m}")
    if len(rows) - 1 != m:
        raise GraphParseError(
            f"line {header_no}: header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, ln in rows[1:]:
        ep = ln.split()
        if len(ep) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(ep[0]), int(ep[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer endpoint in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range in {ln!r}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges, name=name)


def render_edge_list(g: Graph) -> str:
    """Canonical writer: ``n m`` header then sorted edges ``u v`` with u < v."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, edges, name=f"K{n}")


def path(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges, name=f"C{n}")


def star(s: int) -> Graph:
    """Star with center 0 and s leaves."""
    if s < 1:
        raise ValueError("star needs s >= 1 leaves")
    return Graph.from_edges(s + 1, [(0, i) for i in range(1, s + 1)], name=f"K1_{s}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges, name=f"K{a}_{b}")


def h_ln(n: int, ell: int) -> Graph:
    """Two copies of K_n joined by ``ell`` edges between corresponding vertices.

    Vertices 0..n-1 are the first copy, n..2n-1 the second; vertex i is
    matched with n+i for i < ell.
    """
    if n < 3:
        raise ValueError("h_ln needs n >= 3")
    if not 1 <= ell <= n:
        raise ValueError("h_ln needs 1 <= ell <= n")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges += [(n + u, n + v) for u in range(n) for v in range(u + 1, n)]
    edges += [(i, n + i) for i in range(ell)]
    return Graph.from_edges(2 * n, edges, name=f"H{n}_{ell}")


def pendant_attach(base: Graph, star_sizes) -> Graph:
    """Attach pendant stars to a base graph.

    ``star_sizes`` maps base vertices to the number of new pendant
    neighbors (>= 1) each receives.  A sequence is interpreted as sizes for
    vertices 0, 1, ...  New pendants are appended after the base vertices,
    grouped by ascending root.
    """
    if not isinstance(star_sizes, dict):
        star_sizes = {i: s for i, s in enumerate(star_sizes)}
    roots = sorted(star_sizes)
    for r in roots:
        if not 0 <= r < base.n:
            raise ValueError(f"star root {r} not a base vertex")
        if star_sizes[r] < 1:
            raise ValueError(f"star size at vertex {r} must be >= 1")
    edges = list(base.edges())
    nxt = base.n
    for r in roots:
        for _ in range(star_sizes[r]):
            edges.append((r, nxt))
            nxt += 1
    sizes = ",".join(str(star_sizes[r]) for r in roots)
    return Graph.from_edges(nxt, edges, name=f"{base.name or 'base'}+stars({sizes})")


_FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "h_ln": h_ln,
    "pendant_attach": pendant_attach,
}


def generate(family: str, *args, **kwargs) -> Graph:
    """Dispatch to a named family generator; unknown family is an error."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}") from None
    return builder(*args, **kwargs)


# ---------------------------------------------------------------------------
# vertex structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    """Partition of the vertices into pendants, quasi-pendants and the core.

    ``star_pendants[i]`` lists the pendant neighbors of ``quasi_pendant[i]``
    and ``star_sizes[i]`` their count.  ``core_component_sets`` are the
    connected components of the subgraph induced by the core.  Twin classes
    are left empty here and filled by :func:`twin_partition`.

    Convention for an isolated edge: the lower endpoint is the pendant and
    the higher is its quasi-pendant, so the three sets always partition V.
    """

    pendant: tuple[int, ...]
    quasi_pendant: tuple[int, ...]
    core: tuple[int, ...]
    star_sizes: tuple[int, ...]
    star_pendants: tuple[tuple[int, ...], ...]
    core_component_sets: tuple[tuple[int, ...], ...]
    true_twin_classes: tuple[tuple[int, ...], ...] = ()
    false_twin_classes: tuple[tuple[int, ...], ...] = ()

    @property
    def p(self) -> int:
        return len(self.pendant)

    @property
    def q(self) -> int:
        return len(self.quasi_pendant)

    @property
    def r(self) -> int:
        """Internal vertex count: quasi-pendants plus the core."""
        return self.q + len(self.core)


def classify_vertices(g: Graph) -> StructureReport:
    """Split V into pendants, quasi-pendants, and core vertices.

    A degree-1 vertex is a pendant unless it is the higher-indexed endpoint
    of an isolated edge, in which case it serves as the quasi-pendant of its
    partner.  Isolated vertices land in the core with degree 0.
    """
    deg = g.degrees()
    pendant = []
    for v in range(g.n):
        if deg[v] != 1:
            continue
        u = g.neighbors[v][0]
        if deg[u] >= 2 or v < u:
            pendant.append(v)
    pend_set = set(pendant)
    quasi = sorted({g.neighbors[v][0] for v in pendant})
    core = [v for v in range(g.n) if v not in pend_set and v not in set(quasi)]
    star_pend = tuple(tuple(v for v in g.neighbors[r] if v in pend_set) for r in quasi)
    core_set = set(core)
    padded = Graph.from_edges(
        g.n, [(u, v) for u, v in g.edges() if u in core_set and v in core_set])
    # padding puts every non-core vertex in a singleton component; drop those
    core_comps = tuple(c for c in padded.components() if set(c) <= core_set)
    return StructureReport(
        pendant=tuple(pendant),
        quasi_pendant=tuple(quasi),
        core=tuple(core),
        star_sizes=tuple(len(sp) for sp in star_pend),
        star_pendants=star_pend,
        core_component_sets=core_comps,
    )


def twin_partition(g: Graph, kind: str) -> tuple[tuple[int, ...], ...]:
    """Maximal classes of true twins (equal closed neighborhoods) or false
    twins (equal open neighborhoods, hence nonadjacent).  Only classes of
    size >= 2 are returned, ordered by least member.
    """
    if kind not in ("true_twins", "false_twins"):
        raise ValueError("kind must be 'true_twins' or 'false_twins'")
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        key = frozenset(g.neighbors[v])
        if kind == "true_twins":
            key = key | {v}
        groups.setdefault(key, []).append(v)
    classes = [tuple(sorted(vs)) for vs in groups.values() if len(vs) >= 2]
    return tuple(sorted(classes, key=lambda c: c[0]))


def bipartition(g: Graph):
    """Two-coloring as a tuple of 0/1, or None if the graph has an odd cycle.

    Deterministic: BFS from the lowest-index vertex of each component,
    visiting neighbors in ascending order; each BFS root gets color 0.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in g.neighbors[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return tuple(color)


@dataclass(frozen=True)
class CoreComponent:
    """One connected component of the core, with original-graph degrees.

    ``vertices`` are original ids (ascending); ``graph`` is the induced
    subgraph relabeled 0..k-1 in the same order; ``degrees_in_g[i]`` is the
    degree of ``vertices[i]`` in the *full* graph, as needed by the reduced
    diagonal blocks.
    """

    vertices: tuple[int, ...]
    graph: Graph
    degrees_in_g: tuple[int, ...]


def core_components(g: Graph, report: StructureReport) -> tuple[CoreComponent, ...]:
    """Induced core components annotated with degrees taken in g itself."""
    out = []
    for comp in report.core_component_sets:
        sub = g.induced(comp)
        out.append(CoreComponent(
            vertices=comp,
            graph=sub,
            degrees_in_g=tuple(g.degree(v) for v in comp),
        ))
    return tuple(out)


@dataclass(frozen=True)
class Labeling:
    """Permutation sending structural slots to original vertex ids.

    Slot order: for each quasi-pendant root in ascending order, its pendants
    (ascending) then the root itself; all core vertices (ascending) last.
    """

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("labeling is not a permutation of 0..n-1")

    def position(self, v: int) -> int:
        return self.order.index(v)


def build_labeling(g: Graph, report: StructureReport) -> Labeling:
    order: list[int] = []
    for root, pend in zip(report.quasi_pendant, report.star_pendants):
        order.extend(pend)
        order.append(root)
    order.extend(report.core)
    return Labeling(tuple(order))
