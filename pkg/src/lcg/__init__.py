"""Commuting graphs of solvable Lie algebras of dimension <= 4 over finite fields."""

__version__ = "0.1.0"

from .catalog import (
    AlgebraId,
    instantiate,
    predicted_cc_count,
    predicted_center,
    predicted_components,
)
from .field import FieldElement, FieldSpec, make_field, parse_field
from .graph import CommutingGraph, components, components_naive
from .lie import LieAlgebra, lie_make
from .shapes import CliqueUnion, Complete, Windmill, check_shape
from .verify import sweep

__all__ = [
    "AlgebraId",
    "CliqueUnion",
    "CommutingGraph",
    "Complete",
    "FieldElement",
    "FieldSpec",
    "LieAlgebra",
    "Windmill",
    "check_shape",
    "components",
    "components_naive",
    "instantiate",
    "lie_make",
    "make_field",
    "parse_field",
    "predicted_cc_count",
    "predicted_center",
    "predicted_components",
    "sweep",
]
