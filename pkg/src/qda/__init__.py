"""Exact construction and verification of quadratic differential algebras."""

__version__ = "0.1.0"
