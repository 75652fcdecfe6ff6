"""Exact verification toolkit for quartic symmetroids given by symmetric 4x4 pencils."""

__version__ = "0.1.0"
