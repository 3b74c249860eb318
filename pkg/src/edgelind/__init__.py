"""Linearity defect, Betti numbers and graph invariants of edge ideals."""

from .errors import (
    DomainError,
    EdgelindError,
    InputError,
    InternalError,
    PreconditionError,
    ResourceError,
)
from .graph import Graph
from .hochster import hochster_betti, squarefree_hochster_betti
from .lind import linear_part, linearity_defect
from .linalg import GF2, QQ, FieldSpec
from .monomials import MonomialIdeal, edge_ideal, parse_ideal
from .resolution import (
    BettiTable,
    GradedFreeComplex,
    betti_table,
    lattice_resolution,
    minimal_resolution,
    minimalize_complex,
    projective_dimension,
    regularity,
    taylor_complex,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "DomainError",
    "EdgelindError",
    "FieldSpec",
    "GF2",
    "Graph",
    "GradedFreeComplex",
    "InputError",
    "InternalError",
    "MonomialIdeal",
    "PreconditionError",
    "QQ",
    "ResourceError",
    "betti_table",
    "edge_ideal",
    "hochster_betti",
    "lattice_resolution",
    "linear_part",
    "linearity_defect",
    "minimal_resolution",
    "minimalize_complex",
    "parse_ideal",
    "projective_dimension",
    "regularity",
    "squarefree_hochster_betti",
    "taylor_complex",
]
