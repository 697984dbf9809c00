"""Exact character tables of finite permutation groups, with a verdict engine
for the classification of non-solvable groups whose real irreducible character
degrees are all prime powers."""

from ._kernels import BACKEND
from .perm import (
    ClassData,
    GroupElements,
    GroupSpec,
    Permutation,
    center,
    central_product,
    commutator_subgroup,
    compose,
    conjugacy_classes,
    coset_action,
    derived_series_limit,
    direct_product,
    enumerate_group,
    quotient_group,
    subgroup_closure,
)
from .chartab import (
    CycloValue,
    ExactTable,
    ModPTable,
    compute_table,
    exact_table,
    fs_indicator,
    kernel_of,
    lift_value,
    real_degree_set,
    verify_orthogonality,
)
from .classify import (
    Report,
    Verdict,
    build_report,
    classification_verdict,
    consistency_suite,
    degree_set_conclusion,
    prime_power_set,
)
from .structure import (
    NormalLattice,
    StructureReport,
    analyze,
    chillag_mann_type,
    normal_subgroups,
    recognize,
    solvable_radical,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClassData",
    "CycloValue",
    "ExactTable",
    "GroupElements",
    "GroupSpec",
    "ModPTable",
    "NormalLattice",
    "Permutation",
    "Report",
    "StructureReport",
    "Verdict",
    "analyze",
    "build_report",
    "center",
    "central_product",
    "chillag_mann_type",
    "classification_verdict",
    "commutator_subgroup",
    "compose",
    "compute_table",
    "conjugacy_classes",
    "consistency_suite",
    "coset_action",
    "degree_set_conclusion",
    "derived_series_limit",
    "direct_product",
    "enumerate_group",
    "exact_table",
    "fs_indicator",
    "kernel_of",
    "lift_value",
    "normal_subgroups",
    "prime_power_set",
    "quotient_group",
    "real_degree_set",
    "recognize",
    "solvable_radical",
    "subgroup_closure",
    "verify_orthogonality",
    "__version__",
]
