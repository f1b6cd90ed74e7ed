"""Exact lattice and surface computations for an abelian surface with an
order-3 automorphism and its nine-cusped quartic."""

from .errors import CusplabError
from .report import Check, Report

__version__ = "0.1.0"

__all__ = ["CusplabError", "Check", "Report", "__version__"]
