"""Eigenvalue distribution of A_alpha matrices: spectra, graph invariants and bound certificates."""

from __future__ import annotations

from .graph import Graph
from .spectra import Spectrum, eig_sym

__version__ = "0.1.0"

__all__ = ["Graph", "Spectrum", "eig_sym", "__version__"]
