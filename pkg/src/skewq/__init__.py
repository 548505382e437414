"""Exact classification toolkit for quadrics in skew projective coordinates."""

from .classify import (
    CatalogEntry,
    CategoryLabel,
    OrbitSummary,
    SweepReport,
    TheoremViolation,
    catalog,
    expected_from_ell,
    stable_category,
    verify_conjecture,
    verify_theorems,
)
from .clifford import (
    CommutationMatrix,
    F2Form,
    Representation,
    SymplecticBasis,
    WedderburnType,
    anticommutation_form,
    explicit_representation,
    f2_rank,
    mu_matrix,
    symplectic_basis,
    wedderburn_type,
)
from .oracle import (
    AlgebraTable,
    WedderburnCertificate,
    center_dimension,
    certify_wedderburn,
    idempotent_check,
    semisimplicity_check,
    structure_constants,
)
from .pointscheme import (
    PointScheme,
    count_p1,
    count_p1_closed,
    minimal_transversals,
    point_scheme,
    scheme_label,
)
from .signs import (
    Permutation,
    SignMatrix,
    TripleSet,
    apply_permutation,
    bad_triples,
    canonical_form,
    realize_sign_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "CatalogEntry",
    "CategoryLabel",
    "CommutationMatrix",
    "F2Form",
    "OrbitSummary",
    "Permutation",
    "PointScheme",
    "Representation",
    "SignMatrix",
    "SweepReport",
    "SymplecticBasis",
    "TheoremViolation",
    "TripleSet",
    "WedderburnCertificate",
    "WedderburnType",
    "anticommutation_form",
    "apply_permutation",
    "bad_triples",
    "canonical_form",
    "catalog",
    "center_dimension",
    "certify_wedderburn",
    "count_p1",
    "count_p1_closed",
    "expected_from_ell",
    "explicit_representation",
    "f2_rank",
    "idempotent_check",
    "minimal_transversals",
    "mu_matrix",
    "point_scheme",
    "realize_sign_matrix",
    "scheme_label",
    "semisimplicity_check",
    "stable_category",
    "structure_constants",
    "symplectic_basis",
    "verify_conjecture",
    "verify_theorems",
    "wedderburn_type",
]
