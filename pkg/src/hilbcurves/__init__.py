"""Exact tools for Hilbert schemes of smooth curves in projective space."""

from .bounds import chi_expected, pi, pi_1
from .hilbert import analyze, classification_table

__all__ = ["analyze", "chi_expected", "classification_table", "pi", "pi_1"]
__version__ = "0.1.0"
