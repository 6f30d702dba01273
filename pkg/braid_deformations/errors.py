"""
Exceptions raised by `braid_deformations`.

Model construction failures stay pydantic `ValidationError`s; everything the
operations themselves reject derives from `BraidDeformationError`.
"""


class BraidDeformationError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BraidDeformationError, ValueError):
    """An argument is outside the domain of an operation (bad labels, caps, primes)."""


class ResourceLimitError(BraidDeformationError):
    """The requested computation exceeds the enumeration budget."""


class BadReductionError(BraidDeformationError):
    """Point counts do not fit a monic integer polynomial even after escalating primes."""


class VerificationError(BraidDeformationError):
    """An internal consistency check failed; this points at a bug, not at the input."""


__all__ = [
    "BraidDeformationError",
    "InputError",
    "ResourceLimitError",
    "BadReductionError",
    "VerificationError",
]
