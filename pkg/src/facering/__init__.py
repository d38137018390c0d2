"""Exact toolkit for face rings of simplicial complexes with singularities.

Classifies singular faces, realizes the finely graded module structure of
face-ring local cohomology, predicts the local cohomology of quotients by
generic linear forms, and cross-checks every closed formula against
independent brute-force linear algebra over Q or a prime field.
"""

from .complexes import SimplicialComplex, SizeLimitError, from_facets
from .linalg import GF, QQ, FieldSpec, Matrix
from .cohomology import induced_map, reduced_cohomology_dim, relative_cohomology
from .singularity import (
    NEG_INFINITY,
    cm_in_codim,
    is_buchsbaum,
    is_cm,
    is_cm_along,
    is_singular_face,
    singularity_dimension,
)
from .local_cohomology import (
    GenericCoefficients,
    HilbertSeries,
    kernel_dim_bruteforce,
    kernel_dim_formula,
    lc_coarse_dim,
    lc_fine_dim,
    lc_hilbert_series,
    make_generic,
    pole_order,
    theta_action_matrix,
)
from .quotient import (
    QuotientLcTable,
    is_homologically_isolated,
    isolated_quotient_dims,
    predicts_finite_lc,
    quotient_lc_dim,
    vertex_cohomology_map,
)
from .artinian import ReductionHilbert, determinacy_probe, reduction_hilbert
from .squarefree import (
    SqfreeData,
    sqfree_data_of_face_ring,
    sqfree_hilbert,
    sqfree_lc_data,
    sqfree_quotient_hilbert,
    sqfree_quotient_lc,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "FieldSpec",
    "GenericCoefficients",
    "HilbertSeries",
    "Matrix",
    "NEG_INFINITY",
    "QuotientLcTable",
    "ReductionHilbert",
    "SimplicialComplex",
    "SizeLimitError",
    "SqfreeData",
    "cm_in_codim",
    "determinacy_probe",
    "from_facets",
    "induced_map",
    "is_buchsbaum",
    "is_cm",
    "is_cm_along",
    "is_homologically_isolated",
    "is_singular_face",
    "isolated_quotient_dims",
    "kernel_dim_bruteforce",
    "kernel_dim_formula",
    "lc_coarse_dim",
    "lc_fine_dim",
    "lc_hilbert_series",
    "make_generic",
    "pole_order",
    "predicts_finite_lc",
    "quotient_lc_dim",
    "reduced_cohomology_dim",
    "reduction_hilbert",
    "relative_cohomology",
    "singularity_dimension",
    "sqfree_data_of_face_ring",
    "sqfree_hilbert",
    "sqfree_lc_data",
    "sqfree_quotient_hilbert",
    "sqfree_quotient_lc",
    "theta_action_matrix",
    "vertex_cohomology_map",
]
