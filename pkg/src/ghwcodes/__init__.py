"""Few-weight linear codes over finite fields and exact enumeration oracles for
their weight distributions, generalized Hamming weights and subcode support
weight distributions."""

from ._config import BudgetExceededError
from .codes import (
    GriesmerReport,
    LinearCode,
    WeightTable,
    code_from_generator,
    ghw,
    griesmer_from_hierarchy,
    griesmer_report,
    sswd_bruteforce,
    sswd_dual,
    subcode_support_weight,
    weight_distribution,
)
from .constructions import (
    ClosedFormBundle,
    ConstructionSpec,
    VerificationReport,
    closed_form,
    construct,
    fewness_bounds,
    grs_matrix,
    simplex_matrix,
    verify,
)
from .field import FieldElement, FiniteField, element_enumerate, field_create
from .linalg import (
    MatrixGF,
    SubspaceBasis,
    enumerate_subspaces,
    kernel_basis,
    membership_count,
    projective_points,
    rref,
)
from .qcombinat import ChainProfile, chain_subspace_count, gaussian_binomial, intersection_count_M

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ChainProfile",
    "ClosedFormBundle",
    "ConstructionSpec",
    "FieldElement",
    "FiniteField",
    "GriesmerReport",
    "LinearCode",
    "MatrixGF",
    "SubspaceBasis",
    "VerificationReport",
    "WeightTable",
    "chain_subspace_count",
    "closed_form",
    "code_from_generator",
    "construct",
    "element_enumerate",
    "enumerate_subspaces",
    "fewness_bounds",
    "field_create",
    "gaussian_binomial",
    "ghw",
    "griesmer_from_hierarchy",
    "griesmer_report",
    "grs_matrix",
    "intersection_count_M",
    "kernel_basis",
    "membership_count",
    "projective_points",
    "rref",
    "simplex_matrix",
    "sswd_bruteforce",
    "sswd_dual",
    "subcode_support_weight",
    "verify",
    "weight_distribution",
]
