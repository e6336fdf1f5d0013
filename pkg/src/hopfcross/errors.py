"""Exception hierarchy.

Errors raised after a failed verification carry the offending
:class:`~hopfcross.hopfcore.AxiomReport` as ``.report`` when there is one.
"""

from __future__ import annotations


class HopfError(Exception):
    def __init__(self, message: str = "", report=None):
        super().__init__(message)
        self.report = report


class ShapeMismatch(HopfError, ValueError):
    pass


class Singular(HopfError, ArithmeticError):
    pass


class NotConvInvertible(HopfError, ArithmeticError):
    pass


class NoAntipode(NotConvInvertible):
    pass


class NotAGroup(HopfError, ValueError):
    pass


class SystemNotCertified(HopfError):
    pass


class GroupAxiomFailure(HopfError):
    pass


class NotCocommutative(HopfError):
    pass


class NotCoalgebraMap(HopfError):
    pass


class LazyCheckFailed(HopfError):
    pass


class PreconditionFailed(HopfError):
    pass


class NotBijective(HopfError):
    pass


class NotNormal(HopfError):
    pass


class LeftActionNotTrivial(HopfError):
    pass


class NotAnIntegral(HopfError):
    pass


class QuadrupleNotCertified(HopfError):
    pass


class NotABraiding(HopfError):
    pass


class NotRootOfUnity(HopfError, ValueError):
    pass


class AlphaNotSymmetric(HopfError, ValueError):
    pass


class UpsilonConditionFailed(HopfError, ValueError):
    pass


class SearchSpaceTooLarge(HopfError):
    pass


class ShapeNotSpecial(HopfError):
    pass
