from .clifford import DimensionMismatch


class OrientationMismatch(ValueError):
    """Operands were built with different orientation signs (lambda)."""


class SingularElement(ArithmeticError):
    """The element has no inverse because a seminorm vanishes.

    ``which`` lists the vanishing seminorms (a subset of ``(1, 2)``).
    """

    def __init__(self, which, element=None):
        self.which = tuple(which)
        self.element = element
        names = " and ".join(f"||X||_{w}" for w in self.which) or "a seminorm"
        super().__init__(f"element is singular: {names} vanishes")


class NotOrthogonal(ValueError):
    """The real and dual parts of a sedenion-like element are not orthogonal."""

    def __init__(self, defect, element=None):
        self.defect = defect
        self.element = element
        super().__init__(f"orthogonality defect is nonzero: {defect}")


class ZeroDenominator(ArithmeticError):
    pass


__all__ = [
    "DimensionMismatch",
    "OrientationMismatch",
    "SingularElement",
    "NotOrthogonal",
    "ZeroDenominator",
]
