"""twosilt: two-term silting complexes over bound quiver algebras.

Exact (rational or prime-field) computation with finite-dimensional basic
algebras given by quivers and relations: construction of the based algebra,
two-term complexes of projectives, silting mutation, exhaustive and
sign-restricted enumeration of two-term silting complexes, and structural
certificates for a family of Borel-type Schur algebras.
"""

__version__ = "0.1.0"

from .fields import QQ, PrimeField, field_from_spec
from .presentation import (
    Arrow,
    Quiver,
    Presentation,
    DslError,
    NormalizationError,
    parse_presentation,
    normalize_presentation,
)
from .algebra import (
    BasedAlgebra,
    build_based_algebra,
    quotient_by_ideal,
    idempotent_truncation,
    direct_sum,
    semisimple_algebra,
    minimal_relation_matrix,
    verify_anti_automorphism,
)
from .complexes import (
    TwoTermComplex,
    projective_stalks,
    shifted_stalks,
    hom_dim,
    g_matrix,
    end_algebra,
    is_presilting,
    is_silting,
    is_tilting,
    left_mutation,
    right_mutation,
    mutate,
    HomCache,
)
from .explore import (
    BudgetExhausted,
    HasseGraph,
    ExplorationReport,
    total_g_vector,
    sign_region_of,
    normalize_epsilon,
    enumerate_2silt,
    enumerate_2silt_epsilon,
    epsilon_bounds,
    build_A_epsilon,
    source_sink_simplify,
    duality_transport,
    sigma_transport,
    tilting_mutation,
    tilting_transport,
    canonical_gmatrix,
    verify_fixture,
)
from .borelschur import (
    compositions,
    borel_schur_quiver,
    borel_schur_presentation_n2,
    borel_schur_algebra,
    sigma_permutation,
    structural_checks,
    concealed_certificate,
    is_tau_tilting_finite,
    classification_report,
)
from .catalog import (
    CatalogError,
    resolve_presentation,
    resolve_algebra,
    concealed_target,
    certificate_spec,
)

__all__ = [
    "QQ",
    "PrimeField",
    "field_from_spec",
    "Arrow",
    "Quiver",
    "Presentation",
    "DslError",
    "NormalizationError",
    "parse_presentation",
    "normalize_presentation",
    "BasedAlgebra",
    "build_based_algebra",
    "quotient_by_ideal",
    "idempotent_truncation",
    "direct_sum",
    "semisimple_algebra",
    "minimal_relation_matrix",
    "verify_anti_automorphism",
    "TwoTermComplex",
    "projective_stalks",
    "shifted_stalks",
    "hom_dim",
    "g_matrix",
    "end_algebra",
    "is_presilting",
    "is_silting",
    "is_tilting",
    "left_mutation",
    "right_mutation",
    "mutate",
    "HomCache",
    "BudgetExhausted",
    "HasseGraph",
    "ExplorationReport",
    "total_g_vector",
    "sign_region_of",
    "normalize_epsilon",
    "enumerate_2silt",
    "enumerate_2silt_epsilon",
    "epsilon_bounds",
    "build_A_epsilon",
    "source_sink_simplify",
    "duality_transport",
    "sigma_transport",
    "tilting_mutation",
    "tilting_transport",
    "canonical_gmatrix",
    "verify_fixture",
    "compositions",
    "borel_schur_quiver",
    "borel_schur_presentation_n2",
    "borel_schur_algebra",
    "sigma_permutation",
    "structural_checks",
    "concealed_certificate",
    "is_tau_tilting_finite",
    "classification_report",
    "CatalogError",
    "resolve_presentation",
    "resolve_algebra",
    "concealed_target",
    "certificate_spec",
]
