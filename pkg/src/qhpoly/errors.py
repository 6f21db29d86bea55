"""Exception types raised across the package."""

from __future__ import annotations


class QHPolyError(Exception):
    """Base class for every error raised by qhpoly."""


class ExponentUnderflow(QHPolyError, ArithmeticError):
    """A monomial transform would produce a negative exponent."""


class NotUnivariate(QHPolyError, ValueError):
    pass


class NotTreePoset(QHPolyError, ValueError):
    """The Hasse diagram is not a spanning tree of the ground set.

    ``index`` is set when the poset came from a list (``qh_from_posets``).
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class BuildingSetError(QHPolyError, ValueError):
    pass


class MissingSingleton(BuildingSetError):
    def __init__(self, element: int):
        super().__init__(f"building set is missing the singleton {{{element}}}")
        self.element = element


class UnionClosureViolation(BuildingSetError):
    def __init__(self, first: tuple[int, ...], second: tuple[int, ...]):
        union = tuple(sorted(set(first) | set(second)))
        super().__init__(
            f"union closure violated: {list(first)} and {list(second)} intersect "
            f"but their union {list(union)} is not a member"
        )
        self.pair = (first, second)
        self.union = union


class OverlappingSupports(BuildingSetError):
    pass


class NotConnected(BuildingSetError):
    pass


class NotOmegaInvariant(BuildingSetError):
    """The building set is not fixed by the reversal i -> n - i + 1."""


class BadParams(QHPolyError, ValueError):
    pass


class NotMaximal(QHPolyError, ValueError):
    pass


class InvalidTubing(QHPolyError, ValueError):
    pass
