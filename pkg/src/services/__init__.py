"""
Services Package

Digraph operations, exact linear algebra, the feasibility solver, column
elimination, the conjecture checkers and the enumeration sweep.
"""

from .conjecture_service import (
    ConjectureId,
    ConjectureService,
    CrossCheckReport,
    EvidenceKind,
    Verdict,
    VerdictStatus,
)
from .farkas_service import Certificate, Solution, StandardSystem, solve_standard
from .linalg_service import Invertible, Singular, invert, second_neighborhood_matrix
from .sweep_service import EnumSpec, SearchReport, SweepMode, SweepService

__all__ = [
    "ConjectureId",
    "ConjectureService",
    "CrossCheckReport",
    "EvidenceKind",
    "Verdict",
    "VerdictStatus",
    "Certificate",
    "Solution",
    "StandardSystem",
    "solve_standard",
    "Invertible",
    "Singular",
    "invert",
    "second_neighborhood_matrix",
    "EnumSpec",
    "SearchReport",
    "SweepMode",
    "SweepService",
]
