"""Exact orbifold arithmetic and model-neck spectral checks for Z2-harmonic spinors and 1-forms."""

__version__ = "0.1.0"
