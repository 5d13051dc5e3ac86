"""Finite groups, curves and genus formulas for zero 2-rank curves in characteristic 2."""

__version__ = "0.1.0"
