"""Exact classification toolkit for log del Pezzo surfaces of fractional index in [1/2, 1)."""

__version__ = "0.1.0"
