"""Exact verification toolkit for the square-zero locus in sp4 and its deformations."""

__version__ = "0.1.0"
