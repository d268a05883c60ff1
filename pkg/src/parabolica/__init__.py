"""Exact-arithmetic invariants of parabolic gradings of simple Lie algebras."""

__version__ = "0.1.0"
