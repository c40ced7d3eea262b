"""Coend algebras of separable fibre functors, checked in exact arithmetic."""

__version__ = "0.1.0"
