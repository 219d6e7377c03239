"""Quasi-Einstein metrics on compact simple Lie groups: exact solver and tensor certifier."""

__version__ = "0.1.0"

from .catalog import EmbeddingCase, list_cases, make_case, parse_case_id, realize
from .lie_core import LieAlgebraData, LieAlgebraError, MetricSpec, ReductiveDecomposition
from .qem_solver import QEMParams, SolutionReport, SolverError
from .verifier import Certificate, certify, certify_case, certify_dual

__all__ = [
    "Certificate",
    "EmbeddingCase",
    "LieAlgebraData",
    "LieAlgebraError",
    "MetricSpec",
    "QEMParams",
    "ReductiveDecomposition",
    "SolutionReport",
    "SolverError",
    "certify",
    "certify_case",
    "certify_dual",
    "list_cases",
    "make_case",
    "parse_case_id",
    "realize",
]
