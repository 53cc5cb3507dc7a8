"""Exact computations with crossed-product gradings over finite groups."""

__version__ = "0.1.0"
