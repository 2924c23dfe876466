"""Exact symbolic verification engine for noncommutative-residue
boundary computations of twisted Dirac and signature operators."""

__version__ = "0.1.0"
