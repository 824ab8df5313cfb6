import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from specblend import Graph

settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 8):
    """Arbitrary simple graphs with a bounded vertex count."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    return Graph.from_edges(n, edges)


@st.composite
def graphs_with_edges(draw, min_n: int = 2, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    if g.m == 0:
        g = g.add_edge(0, 1)
    return g
