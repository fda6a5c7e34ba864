"""Graded necklace Lie bialgebras, their BV algebras, and the trace map to
polynomial functions on intertwining representation varieties."""

from .quiver import DoubledQuiver, Quiver, double, parse_quiver, format_quiver
from .necklace import Necklace, NecklaceSum, TensorSum, bracket, cobracket, canonicalize
from .symbv import BVElement, HbarParam, bv_delta
from .superlin import SuperSpace, SuperMatrix, IotaData, default_iota
from .repbv import CoordRing, Polynomial
from .tracemap import TraceMap

__all__ = [
    "DoubledQuiver", "Quiver", "double", "parse_quiver", "format_quiver",
    "Necklace", "NecklaceSum", "TensorSum", "bracket", "cobracket", "canonicalize",
    "BVElement", "HbarParam", "bv_delta",
    "SuperSpace", "SuperMatrix", "IotaData", "default_iota",
    "CoordRing", "Polynomial", "TraceMap",
]
