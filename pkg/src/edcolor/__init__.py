"""Equitable dominator colorings: exact solver, family constructions and surveys."""

__version__ = "0.1.0"

from .coloring import Coloring, ColoringReport, dominated_classes, is_equitable, is_proper, validate
from .graph import Graph, GraphClassSpec, build, closed_neighborhood, complement, is_connected
from .solver import CHI, CHI_D, CHI_E, CHI_ED, BudgetExhausted, ConstraintSet, exhaustive_oracle, solve

__all__ = [
    "CHI",
    "CHI_D",
    "CHI_E",
    "CHI_ED",
    "BudgetExhausted",
    "Coloring",
    "ColoringReport",
    "ConstraintSet",
    "Graph",
    "GraphClassSpec",
    "build",
    "closed_neighborhood",
    "complement",
    "dominated_classes",
    "exhaustive_oracle",
    "is_connected",
    "is_equitable",
    "is_proper",
    "solve",
    "validate",
]
