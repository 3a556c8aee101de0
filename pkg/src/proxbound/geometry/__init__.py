from .data_types import (
    ConicPair,
    Congruent,
    Empty,
    SigmaOutcome,
    SigmaSystem,
    Triple,
    TriplePair,
    VerticalLines,
    is_collinear,
)
from .dichotomy import congruent_triples, sigma_dichotomy
from .isometry import Isometry, apply_isometry
from .symmetries import fixes_graph, graph_symmetries, symmetry_center

__all__ = [
    "ConicPair",
    "Congruent",
    "Empty",
    "Isometry",
    "SigmaOutcome",
    "SigmaSystem",
    "Triple",
    "TriplePair",
    "VerticalLines",
    "apply_isometry",
    "congruent_triples",
    "fixes_graph",
    "graph_symmetries",
    "is_collinear",
    "sigma_dichotomy",
    "symmetry_center",
]
