"""Exact Atkin-Lehner operators on mirahoric invariants of GL_n(Q_p)."""

from .characters import UnramifiedChar, chi_eval
from .cosets import (
    CosetDegree,
    MannRep,
    coset_degree,
    enumerate_mann_reps,
    gaussian_binomial,
    verify_partition,
)
from .fields import QQ, Mod, PrimeField, RationalField
from .invariants import (
    HeckeMatrix,
    InvariantBasis,
    canonical_row,
    embedding_matrix,
    enumerate_basis,
    hecke_matrix,
    projector_matrix,
)
from .kirillov import TupleVector, apply_u_tuple, joint_kernel_tuples, w_infty
from .localfield import BaseFieldParams, iwasawa, reduce_mod, val_p
from .spectra import (
    LocalizationSpec,
    SpectralReport,
    banality_check,
    char_poly,
    joint_generalized_nullspace,
    joint_kernel,
    jordan_type,
    spectral_report,
)

__version__ = "0.1.0"

__all__ = [
    "BaseFieldParams",
    "CosetDegree",
    "HeckeMatrix",
    "InvariantBasis",
    "LocalizationSpec",
    "MannRep",
    "Mod",
    "PrimeField",
    "QQ",
    "RationalField",
    "SpectralReport",
    "TupleVector",
    "UnramifiedChar",
    "apply_u_tuple",
    "banality_check",
    "canonical_row",
    "char_poly",
    "chi_eval",
    "coset_degree",
    "embedding_matrix",
    "enumerate_basis",
    "enumerate_mann_reps",
    "gaussian_binomial",
    "hecke_matrix",
    "iwasawa",
    "joint_generalized_nullspace",
    "joint_kernel",
    "joint_kernel_tuples",
    "jordan_type",
    "projector_matrix",
    "reduce_mod",
    "spectral_report",
    "val_p",
    "verify_partition",
    "w_infty",
]
