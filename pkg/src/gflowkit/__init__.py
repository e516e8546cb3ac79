"""Measurement patterns as labelled open graphs: gflow, rewriting and circuit extraction."""

from .angle import Angle
from .clifford import LocalClifford
from .diagram import LabelledOpenGraph, MbqcDiagram, Plane
from .gflow import GFlow, find_gflow, verify_gflow

__all__ = [
    "Angle",
    "LocalClifford",
    "LabelledOpenGraph",
    "MbqcDiagram",
    "Plane",
    "GFlow",
    "find_gflow",
    "verify_gflow",
]

__version__ = "0.1.0"
