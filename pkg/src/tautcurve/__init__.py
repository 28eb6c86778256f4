"""Tautological integrals on symmetric products of curves, by torus localization."""

__version__ = "0.1.0"
