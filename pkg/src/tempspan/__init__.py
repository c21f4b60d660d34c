"""Sparse temporal spanners of temporal cliques."""

__version__ = "0.1.0"
