"""Exact integer computation with principal matrices of numerical semigroups."""

from .linalg import (
    EliminationResult,
    IndexSet,
    IntMatrix,
    adjugate,
    determinant,
    eliminate,
    find_positive_kernel,
    kernel_basis,
    minor,
    principal_minor,
    rank,
    sylvester_identity_check,
)
from .principal import (
    PrincipalEnumeration,
    PrincipalityReport,
    PrincipalMatrix,
    PseudoPrincipalMatrix,
    PseudoRejection,
    all_principal_matrices,
    critical_exponent,
    is_principal,
    principal_matrix,
    recover_generators,
    validate_pseudo,
)
from .semigroup import (
    GeneratorVector,
    Representation,
    canonical_representation,
    contains,
    is_minimal_generating,
    normalize,
    representations,
)
from .structure import (
    Certificate,
    DecompositionReport,
    Dim4Classification,
    Dim5Classification,
    GluingVerdict,
    ScaledPart,
    SignTheoremReport,
    block_decompose,
    bounds_check,
    certify_principal,
    check_vanishing_chain,
    classify_dim4,
    classify_dim5,
    detect_decompositions,
    max_nonzero_principal_minor,
    verify_sign_theorem,
)

__version__ = "0.1.0"
