"""Exact computations with contact curves in P^3 and null curves in the
Klein quadric."""

__version__ = "0.1.0"
