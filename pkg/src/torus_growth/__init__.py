"""Exact growth series of the torus link groups <x, y, z | x^p = y^q = z>."""

from .formulas import TorusParams, main_growth_function
from .polyring import Polynomial, RationalFunction, series_expand

__all__ = ["Polynomial", "RationalFunction", "TorusParams", "main_growth_function", "series_expand"]
__version__ = "0.1.0"
