"""Spectral extremal hypergraph toolkit.

Computes the alpha-spectral radius of k-uniform hypergraphs, closed forms for
stars / balanced bipartite 3-graphs / complete multipartite graphs, and runs
desk-scale exhaustive searches and verification harnesses over forbidden
families.
"""

from .closedforms import (
    ClosedFormValue,
    KkCheck,
    bipartite3_lambda,
    edge_bound,
    kk_check,
    star_lambda,
    turan_lambda,
    uniform_weight_lambda,
)
from .enumeration import enumerate_free
from .errors import (
    AlphaspecError,
    BadAlphaError,
    BadParamsError,
    BoundVoidError,
    DimensionMismatchError,
    DuplicateEdgeError,
    EdgeArityError,
    NotAutomorphismError,
    NotVertexUniformError,
    SearchTooLargeError,
    UniformityMismatchError,
    VertexRangeError,
)
from .extremal import (
    DensityReport,
    DensityRow,
    SearchReport,
    UniversalFamilySpec,
    check_universal,
    colex_conjecture_check,
    density_report,
    ekr_check,
    ex_number,
    ex_s_number,
    spectral_max,
    strongstab_check,
)
from .families import (
    balanced_bipartite3,
    balanced_tripartite3,
    colex_segment,
    complete,
    f5,
    fano,
    intersecting_family,
    parse_family_token,
    star,
    turan_graph,
)
from .hypergraph import (
    FamilySpec,
    Hypergraph,
    as_family,
    connected_components,
    delete_vertex,
    disjoint_union,
    format_hypergraph_text,
    min_s_degree,
    new_hypergraph,
    parse_hypergraph_text,
    shadow,
)
from .isomorphism import canonical_key, canonical_relabel, contains, is_family_free
from .spectral import (
    SolverConfig,
    SpectralResult,
    WeightVector,
    deletion_bound,
    kkt_residual,
    partial,
    solve,
    symmetrize_pair,
    symmetry_partition,
    tau_value,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaspecError",
    "BadAlphaError",
    "BadParamsError",
    "BoundVoidError",
    "ClosedFormValue",
    "DensityReport",
    "DensityRow",
    "DimensionMismatchError",
    "DuplicateEdgeError",
    "EdgeArityError",
    "FamilySpec",
    "Hypergraph",
    "KkCheck",
    "NotAutomorphismError",
    "NotVertexUniformError",
    "SearchReport",
    "SearchTooLargeError",
    "SolverConfig",
    "SpectralResult",
    "UniformityMismatchError",
    "UniversalFamilySpec",
    "VertexRangeError",
    "WeightVector",
    "as_family",
    "balanced_bipartite3",
    "balanced_tripartite3",
    "bipartite3_lambda",
    "canonical_key",
    "canonical_relabel",
    "check_universal",
    "colex_conjecture_check",
    "colex_segment",
    "complete",
    "connected_components",
    "contains",
    "delete_vertex",
    "deletion_bound",
    "density_report",
    "disjoint_union",
    "edge_bound",
    "ekr_check",
    "enumerate_free",
    "ex_number",
    "ex_s_number",
    "f5",
    "fano",
    "format_hypergraph_text",
    "intersecting_family",
    "is_family_free",
    "kk_check",
    "kkt_residual",
    "min_s_degree",
    "new_hypergraph",
    "parse_family_token",
    "parse_hypergraph_text",
    "partial",
    "shadow",
    "solve",
    "spectral_max",
    "star",
    "star_lambda",
    "strongstab_check",
    "symmetrize_pair",
    "symmetry_partition",
    "tau_value",
    "turan_graph",
    "turan_lambda",
    "uniform_weight_lambda",
]
