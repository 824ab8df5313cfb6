"""Predictor/checker pairs for the structural eigenvalue results."""

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from specblend import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    VACUOUS,
    Graph,
    HypothesisError,
    StructureError,
    blend_matrix,
    classify_vertices,
    complete,
    convexity_concavity_check,
    cycle,
    edge_delete_compare,
    edge_rotation_check,
    exact_pendant_multiplicity,
    h_ln,
    hln_partition,
    hln_spectrum,
    hln_spectrum_check,
    misc_identities_check,
    multiplicity_bounds,
    multiplicity_of,
    nullity_decomposition,
    path,
    pendant_attach,
    star,
    star_block_charpoly_check,
    sym_eig,
)
from specblend.corpus import pendant_gallery, stars_with_core, twin_gallery

from conftest import graphs_with_edges


# ---------------------------------------------------------------------------
# multiplicity bounds
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("alpha", [0.2, 0.8])
def test_twin_gallery_reproduces_all_four_bounds(alpha):
    g = twin_gallery()
    false_v = multiplicity_bounds(g, alpha, "false_twins")
    true_v = multiplicity_bounds(g, alpha, "true_twins")
    bounds = sorted(v.predicted["bound"] for v in false_v + true_v)
    assert bounds == [1, 2, 2, 6]
    assert all(v.status == PASS for v in false_v + true_v)
    # the aggregated degree-1 bound covers both leaf classes
    deg1 = [v for v in false_v if v.predicted["degree"] == 1]
    assert len(deg1) == 1 and deg1[0].predicted["bound"] == 6
    assert deg1[0].predicted["value"] == pytest.approx(1 - alpha)


def test_star_pendant_bound():
    s = 5
    verdicts = multiplicity_bounds(star(s), 0.3, "pendant")
    assert len(verdicts) == 1
    v = verdicts[0]
    assert v.predicted["bound"] == s - 1
    assert v.status == PASS


def test_complete_graph_true_twin_bound_is_tight():
    verdicts = multiplicity_bounds(complete(4), 0.2, "true_twins")
    assert len(verdicts) == 1
    v = verdicts[0]
    assert v.predicted["value"] == pytest.approx(3.0)  # d+1-alpha(d+2), d=3
    assert v.predicted["bound"] == 3
    assert v.observed == 3 and v.status == PASS


def test_bounds_empty_when_no_qualifying_sets():
    assert multiplicity_bounds(path(4), 0.3, "false_twins") == []
    assert multiplicity_bounds(cycle(5), 0.3, "pendant") == []


def test_clique_and_independent_set_alias_twins():
    g = twin_gallery()
    assert [v.predicted for v in multiplicity_bounds(g, 0.4, "clique")] == \
        [v.predicted for v in multiplicity_bounds(g, 0.4, "true_twins")]
    assert [v.predicted for v in multiplicity_bounds(g, 0.4, "independent_set")] == \
        [v.predicted for v in multiplicity_bounds(g, 0.4, "false_twins")]


@given(graphs_with_edges(max_n=8),
       st.sampled_from([0.0, 0.25, 0.45, 0.55, 0.8, 1.0]),
       st.sampled_from(["false_twins", "true_twins", "pendant"]))
def test_bounds_never_fail(g, alpha, kind):
    for v in multiplicity_bounds(g, alpha, kind):
        assert v.status == PASS


# ---------------------------------------------------------------------------
# exact pendant multiplicity
# ---------------------------------------------------------------------------

def test_star_exact_multiplicity():
    v = exact_pendant_multiplicity(star(3), 0.3)
    assert v.predicted == 2 and v.observed == 2 and v.status == PASS
    spec = sym_eig(blend_matrix(star(3), 0.3))
    assert multiplicity_of(spec, 0.7, 1e-6) == 2


def test_quasi_only_laplacian_multiplicity_of_one():
    g = pendant_attach(complete(3), (2, 1, 3))
    rep = classify_vertices(g)
    assert rep.core == ()
    v = exact_pendant_multiplicity(g, 0.0)
    assert v.predicted == rep.p - rep.q == 3
    assert v.status == PASS


def test_stars_with_core_multiplicity():
    v = exact_pendant_multiplicity(stars_with_core(), 0.25)
    assert v.status == PASS
    assert v.predicted == v.observed == 4


def test_exact_multiplicity_excludes_half():
    with pytest.raises(HypothesisError):
        exact_pendant_multiplicity(star(3), 0.5)


def test_exact_multiplicity_needs_pendants():
    with pytest.raises(StructureError):
        exact_pendant_multiplicity(cycle(4), 0.3)


@given(graphs_with_edges(max_n=9),
       st.sampled_from([0.0, 0.25, 0.55, 2.0 / 3.0, 0.9]))
def test_exact_multiplicity_matches_brute_force(g, alpha):
    if classify_vertices(g).p == 0:
        return
    assert exact_pendant_multiplicity(g, alpha).status == PASS


# ---------------------------------------------------------------------------
# nullity decomposition
# ---------------------------------------------------------------------------

def test_star_nullity():
    verdicts = nullity_decomposition(star(5))
    adj = next(v for v in verdicts if v.theorem == "nullity.adjacency")
    assert adj.predicted == 4 and adj.status == PASS


def test_path4_nonsingular_adjacency():
    verdicts = nullity_decomposition(path(4))
    adj = next(v for v in verdicts if v.theorem == "nullity.adjacency")
    assert adj.predicted == 0 and adj.observed == 0 and adj.status == PASS


def test_pendant_gallery_all_three_identities():
    for v in nullity_decomposition(pendant_gallery()):
        assert v.status == PASS, v


# ---------------------------------------------------------------------------
# star block characteristic polynomial
# ---------------------------------------------------------------------------

def test_star_block_size_one_reduces_to_quadratic():
    v = star_block_charpoly_check(1, 2.0, 0.3, (-1.0, 0.0, 0.5, 2.0))
    assert v.status == PASS


def test_star_block_at_half_is_diagonal():
    v = star_block_charpoly_check(4, 3.0, 0.5, (-2.0, 0.25, 0.5, 1.5, 3.0))
    assert v.status == PASS


def test_star_block_matches_oracle_at_random_points():
    rng = np.random.default_rng(13)
    v = star_block_charpoly_check(3, 3.0, 0.3, tuple(rng.uniform(-5, 10, 20)))
    assert v.status == PASS


def test_star_block_rejects_bad_size():
    with pytest.raises(ValueError):
        star_block_charpoly_check(0, 2.0, 0.3, (0.0,))


# ---------------------------------------------------------------------------
# edge deletion
# ---------------------------------------------------------------------------

def test_triangle_edge_deletion_pointwise():
    # L(K_3) = (3,3,0) dominates L(P_3) = (3,1,0)
    mono, strict = edge_delete_compare(complete(3), (0, 2), 0.0)
    assert mono.theorem == "edge_delete.monotone" and mono.status == PASS
    assert strict.status == VACUOUS  # alpha <= 1/2 has no strict claim


def test_cycle_both_regimes_at_055():
    mono, strict = edge_delete_compare(cycle(5), (0, 4), 0.55)
    assert mono.status == PASS
    assert strict.status == PASS


def test_complete_graph_strict_top_drop():
    mono, strict = edge_delete_compare(complete(4), (0, 1), 0.9)
    assert mono.status == VACUOUS  # 0.9 > 2/3
    assert strict.status == PASS
    # closed form: lambda_1(B_0.9(K_4)) = 3*0.9
    spec = sym_eig(blend_matrix(complete(4), 0.9))
    assert spec.top == pytest.approx(2.7, abs=1e-10)


def test_edge_delete_requires_edge():
    with pytest.raises(ValueError):
        edge_delete_compare(path(3), (0, 2), 0.3)


@given(graphs_with_edges(max_n=8), st.sampled_from([0.0, 0.3, 0.5, 2.0 / 3.0]))
def test_edge_delete_monotone_never_fails(g, alpha):
    mono, _ = edge_delete_compare(g, g.edges()[0], alpha)
    assert mono.status == PASS


@given(graphs_with_edges(max_n=8), st.sampled_from([0.6, 0.8, 1.0]))
def test_edge_delete_strict_never_fails(g, alpha):
    _, strict = edge_delete_compare(g, g.edges()[0], alpha)
    assert strict.status in (PASS, INCONCLUSIVE, VACUOUS)
    if g.is_connected():
        assert strict.status in (PASS, INCONCLUSIVE)


# ---------------------------------------------------------------------------
# edge rotation
# ---------------------------------------------------------------------------

def test_rotation_vacuous_on_symmetric_eigenvector():
    # P_4 top eigenvector has x_1 = x_2; the ordering hypothesis is knife-edge
    v = edge_rotation_check(path(4), 0, 1, 2, 0.8)
    assert v.status in (VACUOUS, PASS)
    v = edge_rotation_check(cycle(4), 0, 1, 2, 0.0)
    assert v.status == VACUOUS  # needs negative entries at v, w


def test_rotation_increases_top_at_high_alpha():
    # P_5 Perron vector rises toward the center: 0 < x_1 <= x_2
    v = edge_rotation_check(path(5), 0, 1, 2, 0.8)
    assert v.status == PASS and v.gap > 1e-6


def test_rotation_qualifying_case_below_half():
    g = Graph.from_edges(7, [(0, 2), (0, 4), (0, 6), (1, 3), (1, 5),
                             (2, 3), (2, 5), (2, 6), (4, 6)])
    v = edge_rotation_check(g, 1, 3, 0, 0.0)
    assert v.status == PASS and v.gap > 0.2


def test_rotation_at_half_compares_max_degrees():
    v = edge_rotation_check(path(4), 0, 1, 2, 0.5)
    assert v.theorem == "edge_rotation.max_degree"
    assert v.status == PASS  # rotating to the center makes a higher-degree hub


def test_rotation_validates_arguments():
    with pytest.raises(ValueError):
        edge_rotation_check(path(4), 0, 2, 3, 0.8)  # (0,2) not an edge
    with pytest.raises(ValueError):
        edge_rotation_check(path(4), 0, 1, 1, 0.8)  # already adjacent target


# ---------------------------------------------------------------------------
# convexity / concavity
# ---------------------------------------------------------------------------

def test_convexity_endpoints_are_equalities():
    v = convexity_concavity_check(cycle(5), 0.1, 0.9, (0.0, 1.0))
    assert v.status == PASS
    assert v.gap == pytest.approx(0.0, abs=1e-12)


def test_complete_graph_midpoint_concavity():
    # bottom branch min(3a, 4-5a) is piecewise linear concave
    v = convexity_concavity_check(complete(4), 0.0, 1.0, (0.5,))
    assert v.status == PASS


@given(graphs_with_edges(max_n=8))
def test_convexity_random_graphs(g):
    v = convexity_concavity_check(g, 0.0, 1.0, tuple(k / 10 for k in range(1, 10)))
    assert v.status == PASS


def test_convexity_validates_range():
    with pytest.raises(ValueError):
        convexity_concavity_check(path(3), 0.5, 0.5, (0.5,))


def test_k4_top_and_bottom_curves_are_nonmonotone():
    # the two branches 3a and 4-5a cross at a=1/2, so the extreme curves dip
    grid = np.linspace(0, 1, 21)
    tops, bottoms = [], []
    for a in grid:
        spec = sym_eig(blend_matrix(complete(4), a))
        tops.append(spec.top)
        bottoms.append(spec.bottom)
    for curve in (np.array(tops), np.array(bottoms)):
        diffs = np.diff(curve)
        assert (diffs > 1e-9).any() and (diffs < -1e-9).any()


# ---------------------------------------------------------------------------
# misc identities
# ---------------------------------------------------------------------------

def test_single_edge_radius_at_alpha_one():
    verdicts = misc_identities_check(complete(2), 1.0)
    radius = next(v for v in verdicts if v.theorem == "spectral_radius.top")
    assert radius.status == PASS
    spec = sym_eig(blend_matrix(complete(2), 1.0))
    assert np.allclose(spec.values, [1.0, -1.0])


def test_companion_bound_on_path4_at_zero():
    verdicts = misc_identities_check(path(4), 0.0)
    comp = next(v for v in verdicts if v.theorem == "companion_blend.lower_bound")
    assert comp.status == PASS


def test_quotient_containment_two_clique():
    g = h_ln(6, 3)
    verdicts = misc_identities_check(g, 0.45, partition=hln_partition(6, 3))
    quot = next(v for v in verdicts if v.theorem == "quotient.containment")
    assert quot.status == PASS


def test_radius_vacuous_on_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    verdicts = misc_identities_check(g, 0.8)
    radius = next(v for v in verdicts if v.theorem == "spectral_radius.top")
    assert radius.status == VACUOUS


@given(graphs_with_edges(max_n=8),
       st.sampled_from([0.0, 0.25, 0.45, 0.55, 2.0 / 3.0, 0.8, 1.0]))
def test_misc_identities_never_fail(g, alpha):
    for v in misc_identities_check(g, alpha):
        assert v.status in (PASS, VACUOUS)


# ---------------------------------------------------------------------------
# two-clique closed-form spectrum
# ---------------------------------------------------------------------------

def test_hln_full_matching_multiset_size():
    for n in (3, 5, 8):
        parts = hln_spectrum(n, n, 0.4)
        assert sum(m for _, m in parts) == 2 * n
        assert len(parts) == 4


def test_hln_laplacian_case_matches_eigensolver():
    spec = sym_eig(blend_matrix(h_ln(6, 3), 0.0))
    expanded = np.sort(np.concatenate(
        [np.full(m, v) for v, m in hln_spectrum(6, 3, 0.0)]))[::-1]
    assert np.max(np.abs(spec.values - expanded)) < 1e-7


@pytest.mark.parametrize("alpha", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_hln_grid_agreement(alpha):
    assert hln_spectrum_check(6, 3, alpha).status == PASS


def test_hln_parameter_range():
    with pytest.raises(ValueError):
        hln_spectrum(2, 1, 0.3)
    with pytest.raises(ValueError):
        hln_spectrum(4, 0, 0.3)
    with pytest.raises(ValueError):
        hln_spectrum(4, 5, 0.3)


def test_verdict_report_line_format():
    v = multiplicity_bounds(star(3), 0.25, "pendant")[0]
    line = v.report_line()
    fields = line.split("\t")
    assert len(fields) == 5
    assert fields[0] == "multiplicity_bound.pendant"
    assert fields[2] == "0.25" and fields[3] == PASS
