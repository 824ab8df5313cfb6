"""specblend: convex blends of graph adjacency and Laplacian matrices.

The package builds the one-parameter matrix family alpha*A + (1-alpha)*L on
simple graphs, certifies its spectra, checks the structural multiplicity
results driven by twins and pendant stars, and solves for the parameter
thresholds where positive semidefiniteness is gained or lost.
"""

from .graphs import (
    Graph,
    GraphParseError,
    StructureError,
    StructureReport,
    Labeling,
    CoreComponent,
    parse_edge_list,
    render_edge_list,
    generate,
    complete,
    path,
    cycle,
    star,
    complete_bipartite,
    h_ln,
    pendant_attach,
    classify_vertices,
    twin_partition,
    bipartition,
    core_components,
    build_labeling,
)
from .matrices import (
    SymmetricMatrix,
    ConsistencyError,
    QuotientResult,
    PendantReduction,
    build_base,
    blend_matrix,
    degree_blend_matrix,
    envelope_matrix,
    quadratic_form,
    quotient_matrix,
    pendant_reduction,
    block_det_identity_check,
)
from .eigen import (
    EigenError,
    Spectrum,
    sym_eig,
    multiplicity_of,
    char_poly_eval,
    rayleigh,
    default_group_tol,
)
from .theorems import (
    PASS,
    FAIL,
    VACUOUS,
    INCONCLUSIVE,
    HypothesisError,
    TheoremVerdict,
    multiplicity_bounds,
    exact_pendant_multiplicity,
    nullity_decomposition,
    star_block_charpoly_check,
    edge_delete_compare,
    edge_rotation_check,
    convexity_concavity_check,
    misc_identities_check,
    hln_spectrum,
    hln_partition,
    hln_spectrum_check,
)
from .threshold import (
    ThresholdReport,
    lambda_min_curve,
    beta0,
    alpha0,
    epsilon_gap,
    threshold_report,
    closed_forms,
    hln1_formula_consistency,
)

__version__ = "0.1.0"
