"""Exact decompositions of Betti diagrams into complete-intersection diagrams."""

from .decompose import (
    CandidateSet,
    Decomposition,
    DecompositionReport,
    candidates,
    chain_filter,
    decompose,
    decompose_report,
    extremality_check,
    verify,
)
from .diagram import (
    IDENTITY,
    BettiDiagram,
    add,
    clear_denominators,
    entry,
    odot,
    pdim,
    reg,
    scale,
    total_betti,
    twist,
)
from .formats import format_json, format_text, parse_diagram, parse_json, parse_text
from .koszul import DeterminingVector, ci_diagram, koszul_factor, vector_leq
from .linalg import (
    RationalMatrix,
    SupportBasis,
    cramer_solve,
    denominator_bound,
    det,
    maximal_minor_lcm,
    minors_lcm,
    vectorize,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "Decomposition",
    "DecompositionReport",
    "candidates",
    "chain_filter",
    "decompose",
    "decompose_report",
    "extremality_check",
    "verify",
    "IDENTITY",
    "BettiDiagram",
    "add",
    "clear_denominators",
    "entry",
    "odot",
    "pdim",
    "reg",
    "scale",
    "total_betti",
    "twist",
    "format_json",
    "format_text",
    "parse_diagram",
    "parse_json",
    "parse_text",
    "DeterminingVector",
    "ci_diagram",
    "koszul_factor",
    "vector_leq",
    "RationalMatrix",
    "SupportBasis",
    "cramer_solve",
    "denominator_bound",
    "det",
    "maximal_minor_lcm",
    "minors_lcm",
    "vectorize",
]
