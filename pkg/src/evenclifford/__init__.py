"""Exact arithmetic for the octonion-like and sedenion-like even Clifford algebras."""

from .clifford import Blade, Multivector, SignedBlade, blade_product, even_basis, geometric_product, reverse
from .errors import DimensionMismatch, NotOrthogonal, OrientationMismatch, SingularElement, ZeroDenominator
from .octonion import OctonionLike
from .sampling import SplitMix64, random_element
from .sedenion import DualPart, DualSplit, SedenionLike

__all__ = [
    "Blade",
    "SignedBlade",
    "Multivector",
    "blade_product",
    "geometric_product",
    "reverse",
    "even_basis",
    "OctonionLike",
    "SedenionLike",
    "DualPart",
    "DualSplit",
    "SplitMix64",
    "random_element",
    "DimensionMismatch",
    "OrientationMismatch",
    "SingularElement",
    "NotOrthogonal",
    "ZeroDenominator",
]
