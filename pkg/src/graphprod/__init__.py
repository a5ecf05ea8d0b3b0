"""Semicompleteness and completeness of graph products of abelian groups."""

from .abelian import FGAbelian, NonAbelian, cyclic, expand_graph, primary_decomposition
from .classify import ClassificationReport, Verdict, classify
from .graph import SimplicialGraph, has_separating_star, has_sil
from .words import Presentation

__all__ = [
    "ClassificationReport",
    "FGAbelian",
    "NonAbelian",
    "Presentation",
    "SimplicialGraph",
    "Verdict",
    "classify",
    "cyclic",
    "expand_graph",
    "has_separating_star",
    "has_sil",
    "primary_decomposition",
]

__version__ = "0.1.0"
