"""Rendering of the solver's publication panels from its CLI outputs."""

from .errors import EmptyInput, FiguresError, MissingColumn, MissingInput
from .render import PANELS, FigureSpec, build_spec, render, save

__all__ = [
    "EmptyInput",
    "FigureSpec",
    "FiguresError",
    "MissingColumn",
    "MissingInput",
    "PANELS",
    "build_spec",
    "render",
    "save",
]
