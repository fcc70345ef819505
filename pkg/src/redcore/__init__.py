"""Reductions, cores and colon ideals of m-primary ideals, computed exactly."""

__version__ = "0.1.0"
