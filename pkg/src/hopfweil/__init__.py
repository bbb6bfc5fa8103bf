"""Exact Cartan calculus for finite-dimensional Hopf algebras."""

from .fields import QQ, CyclotomicField, PrimeField
from .hopf import HopfAlgebra, HopfAxiomError, build_hopf
from .catalog import catalog, CATALOG_NAMES

__all__ = [
    "QQ",
    "CyclotomicField",
    "PrimeField",
    "HopfAlgebra",
    "HopfAxiomError",
    "build_hopf",
    "catalog",
    "CATALOG_NAMES",
]

__version__ = "0.1.0"
