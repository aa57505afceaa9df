"""Exact computations with finite-dimensional Hopf algebras, twists and R-matrices."""

__version__ = "0.1.0"
