"""Exact Lindblad dynamics of a dimerized fermion chain with correlated particle loss."""

__version__ = "0.1.0"
