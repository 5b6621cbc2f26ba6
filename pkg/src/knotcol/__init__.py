"""Dehn p-colorings of knot diagrams, R-palette graphs, and minimum-color
machinery."""

__version__ = "0.1.0"
