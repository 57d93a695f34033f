"""
Newton algorithm drivers for the curve part and the finite-codimension part of an ideal.
"""

from .curve import CurveDriver
from .ideal import IdealDriver

__all__ = ["CurveDriver", "IdealDriver"]
