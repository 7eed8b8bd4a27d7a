"""Exact-arithmetic torus fixed-point combinatorics on adjoint varieties."""

__all__ = ["__version__"]
__version__ = "0.1.0"
