"""Cyclic codes over M_4(F_2[u]/<u^k>), their duals and Gray images over GF(16)."""

__version__ = "0.1.0"
