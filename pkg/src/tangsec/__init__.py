"""Hilbert functions of (3,2)-point schemes and secant varieties of tangential varieties of SV_{a,b}."""

from .ffla import DEFAULT_PRIME, FieldElement, monomial_basis, rank, rref
from .hilbert import LinSysReport, critical_s, linsys_dim
from .schemes import (
    BiPoint,
    CrossJet,
    FatPoint,
    Jet,
    PlanePoint,
    SchemeSpec,
    SimplePoint,
    ThreeTwoP1P1,
    ThreeTwoP2,
    condition_matrix,
)
from .secant import DefectReport, defect_table, secant_rank

__all__ = [
    "DEFAULT_PRIME", "FieldElement", "monomial_basis", "rank", "rref",
    "LinSysReport", "critical_s", "linsys_dim",
    "BiPoint", "CrossJet", "FatPoint", "Jet", "PlanePoint", "SchemeSpec", "SimplePoint",
    "ThreeTwoP1P1", "ThreeTwoP2", "condition_matrix",
    "DefectReport", "defect_table", "secant_rank",
]
__version__ = "0.1.0"
