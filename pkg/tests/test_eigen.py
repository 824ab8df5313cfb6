"""Certified eigensolver, grouped multiplicities, exact char-poly oracle."""

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from specblend import (
    blend_matrix,
    build_base,
    char_poly_eval,
    complete,
    cycle,
    multiplicity_of,
    path,
    pendant_reduction,
    rayleigh,
    star,
    sym_eig,
)

from conftest import graphs


# ---------------------------------------------------------------------------
# sym_eig basics
# ---------------------------------------------------------------------------

def test_diag_spectrum_sorted():
    spec = sym_eig(np.diag([3.0, 1.0, 2.0]))
    assert np.allclose(spec.values, [3.0, 2.0, 1.0])


def test_path3_laplacian_spectrum():
    # char poly x(x-1)(x-3) by hand
    spec = sym_eig(build_base(path(3), "L"))
    assert np.allclose(spec.values, [3.0, 1.0, 0.0], atol=1e-12)


@pytest.mark.parametrize("n", [2, 4, 7])
@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.55, 1.0])
def test_complete_graph_closed_form(n, alpha):
    # rank-one shift of the identity: alpha*(n-1) once, n-alpha*(n+1) repeated
    spec = sym_eig(blend_matrix(complete(n), alpha))
    expected = np.sort(np.array([alpha * (n - 1)] + [n - alpha * (n + 1)] * (n - 1)))[::-1]
    assert np.max(np.abs(spec.values - expected)) < 1e-10


@given(graphs(), st.sampled_from([0.0, 0.35, 0.7, 1.0]))
def test_certificates_hold_on_blends(g, alpha):
    m = blend_matrix(g, alpha)
    spec = sym_eig(m)
    resid = m.data @ spec.vectors - spec.vectors * spec.values
    assert np.sqrt((resid ** 2).sum(axis=0)).max() <= 1e-11 * g.n * (1 + m.inf_norm())
    assert np.abs(spec.vectors.T @ spec.vectors - np.eye(g.n)).max() <= 1e-9
    assert abs(spec.values.sum() - np.trace(m.data)) <= 1e-9 * (1 + abs(np.trace(m.data)))


@given(graphs(), st.sampled_from([0.0, 0.4, 1.0]))
def test_moment_identities(g, alpha):
    m = blend_matrix(g, alpha)
    spec = sym_eig(m)
    fro2 = float((m.data ** 2).sum())
    assert abs(float((spec.values ** 2).sum()) - fro2) <= 1e-8 * (1 + fro2)


def test_groups_partition_spectrum():
    spec = sym_eig(blend_matrix(complete(5), 0.2))
    assert sum(m for _, m in spec.groups) == 5
    assert spec.groups[0][1] == 4  # the repeated branch dominates at alpha=0.2


def test_eigenvector_sign_is_deterministic():
    spec = sym_eig(build_base(star(3), "L"))
    for k in range(spec.n):
        col = spec.vectors[:, k]
        assert col[int(np.argmax(np.abs(col)))] > 0


# ---------------------------------------------------------------------------
# multiplicity counting
# ---------------------------------------------------------------------------

def test_star_laplacian_multiplicity():
    # {4, 1, 1, 0} via the pendant reduction at alpha=0
    red = pendant_reduction(star(3), 0.0)
    vals = np.concatenate([np.linalg.eigvalsh(red.reduced.data),
                           np.full(red.pendant_excess, 1.0)])
    assert sorted(np.round(vals, 9)) == [0.0, 1.0, 1.0, 4.0]
    spec = sym_eig(build_base(star(3), "L"))
    assert multiplicity_of(spec, 1.0, 1e-7) == 2


def test_multiplicity_far_value_is_zero():
    spec = sym_eig(build_base(star(3), "L"))
    assert multiplicity_of(spec, 77.0, 1e-3) == 0


def test_multiplicity_complete_graph_branch():
    spec = sym_eig(blend_matrix(complete(4), 0.3))
    assert multiplicity_of(spec, 4 - 5 * 0.3, 1e-8) == 3


def test_multiplicity_monotone_in_tol():
    spec = sym_eig(blend_matrix(cycle(6), 0.45))
    counts = [multiplicity_of(spec, 1.0, t) for t in (1e-9, 1e-6, 1e-2, 1.0)]
    assert counts == sorted(counts)


def test_multiplicity_rejects_nonpositive_tol():
    spec = sym_eig(np.eye(2))
    with pytest.raises(ValueError):
        multiplicity_of(spec, 1.0, 0.0)


# ---------------------------------------------------------------------------
# exact characteristic polynomial
# ---------------------------------------------------------------------------

def test_charpoly_laplacian_singular():
    assert char_poly_eval(build_base(complete(2), "L"), 0.0) == 0.0


def test_charpoly_positive_beyond_norm():
    m = build_base(cycle(5), "Q")
    x = m.inf_norm() * m.n + 1.0
    assert char_poly_eval(m, x) > 0.0


def test_charpoly_path4_adjacency():
    # hand derivation: x^4 - 3x^2 + 1
    a = build_base(path(4), "A")
    for x in (-2.0, -0.5, 0.0, 0.3, 1.0, 2.5):
        assert char_poly_eval(a, x) == pytest.approx(x**4 - 3 * x**2 + 1, abs=1e-12)


def test_charpoly_star_block_closed_form():
    s, d, alpha = 3, 3, 0.3
    e = np.zeros((s + 1, s + 1))
    for i in range(s):
        e[i, i] = 1 - alpha
        e[i, s] = e[s, i] = 2 * alpha - 1
    e[s, s] = (1 - alpha) * d
    rng = np.random.default_rng(7)
    for x in rng.uniform(-5, 10, size=20):
        lhs = char_poly_eval(e, float(x))
        rhs = (x - (1 - alpha)) ** (s - 1) * (
            (x - (1 - alpha) * d) * (x - (1 - alpha)) - s * (2 * alpha - 1) ** 2)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


def test_charpoly_order_cap():
    with pytest.raises(ValueError, match="capped"):
        char_poly_eval(np.eye(13), 0.0)


def test_charpoly_sign_counts_match_eigensolver():
    # sign of det(xI - M) off the spectrum is (-1)^(count of eigenvalues above x)
    for g in (path(4), cycle(5), complete(4), star(5)):
        for which in ("A", "L", "Q"):
            m = build_base(g, which)
            spec = sym_eig(m)
            probes = [spec.values[0] + 1.0, spec.values[-1] - 1.0]
            reps = [v for v, _ in spec.groups]
            probes += [(a + b) / 2 for a, b in zip(reps, reps[1:])]
            for x in probes:
                above = int(np.sum(spec.values > x))
                val = char_poly_eval(m, float(x))
                assert val != 0.0
                assert (val > 0) == (above % 2 == 0)


# ---------------------------------------------------------------------------
# Rayleigh quotients
# ---------------------------------------------------------------------------

def test_rayleigh_of_top_eigenvector():
    m = blend_matrix(cycle(5), 0.35)
    spec = sym_eig(m)
    assert rayleigh(m, spec.vectors[:, 0]) == pytest.approx(spec.top, abs=1e-10)


def test_rayleigh_ones_on_laplacian_is_zero():
    m = build_base(cycle(6), "L")
    assert rayleigh(m, np.ones(6)) == pytest.approx(0.0, abs=1e-12)


def test_rayleigh_within_spectrum_bounds():
    m = blend_matrix(path(4), 0.4)
    spec = sym_eig(m)
    rng = np.random.default_rng(11)
    for _ in range(25):
        x = rng.normal(size=4)
        val = rayleigh(m, x)
        assert spec.bottom - 1e-10 <= val <= spec.top + 1e-10


def test_rayleigh_rejects_zero_vector():
    with pytest.raises(ValueError):
        rayleigh(np.eye(3), np.zeros(3))
