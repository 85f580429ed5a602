"""Unique list colorability: solver, directing audits, M(k) certificates,
graph families and witness search."""

from .certify import Certificate, Rule, certify, verify_certificate
from .constructions import GeneratedInstance
from .directing import run_directing
from .errors import BudgetError, InputError, InternalInconsistency
from .graph import Graph, Metadata, build_graph
from .search import SearchBudget, WitnessStatus, find_witness, m_number_bounds
from .solver import ListAssignment, Verdict, count_colorings, enumerate_colorings, uniqueness

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Certificate",
    "GeneratedInstance",
    "Graph",
    "InputError",
    "InternalInconsistency",
    "ListAssignment",
    "Metadata",
    "Rule",
    "SearchBudget",
    "Verdict",
    "WitnessStatus",
    "build_graph",
    "certify",
    "count_colorings",
    "enumerate_colorings",
    "find_witness",
    "m_number_bounds",
    "run_directing",
    "uniqueness",
    "verify_certificate",
]
