"""Exact verification toolkit for Schur function identities."""
__version__ = "0.1.0"
