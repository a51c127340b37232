"""Multivariate P-Eulerian polynomials, shuffle/DAB/Dyck algebras and stability checks."""
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
