"""
Integer affine hyperplanes `normal . x = offset` and finite arrangements of them.
"""

from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from pydantic import Field, field_serializer, model_validator

from braid_deformations.errors import InputError
from .base import ImmutableModel


def _canonical_key(normal: Sequence[int], offset: int) -> tuple[tuple[int, ...], int]:
    if not any(normal):
        raise InputError("Hyperplane normal must be nonzero")
    divisor = reduce(gcd, normal, abs(offset))
    lead = next(a for a in normal if a != 0)
    if lead < 0:
        divisor = -divisor
    return tuple(a // divisor for a in normal), offset // divisor


class Hyperplane(ImmutableModel):
    """The hyperplane `normal . x = offset`, kept in canonical form.

    Canonical form: the entries of (normal, offset) have gcd 1 and the first
    nonzero entry of normal is positive. Use `Hyperplane.new` to normalize
    arbitrary integer data.
    """

    normal: tuple[int, ...]
    offset: int = 0

    @model_validator(mode="after")
    def ensure_canonical_form(self):
        if not any(self.normal):
            raise ValueError("Hyperplane normal must be nonzero")
        if _canonical_key(self.normal, self.offset) != (self.normal, self.offset):
            raise ValueError(
                f"Hyperplane {self.normal} . x = {self.offset} is not in canonical form; use Hyperplane.new"
            )
        return self

    @classmethod
    def new(cls, normal: Sequence[int], offset: int = 0):
        normal, offset = _canonical_key([int(a) for a in normal], int(offset))
        return cls(normal=normal, offset=offset)

    @classmethod
    def difference(cls, dim: int, i: int, j: int, offset: int = 0):
        """The hyperplane x_i - x_j = offset."""
        normal = [0] * dim
        normal[i], normal[j] = 1, -1
        return cls.new(normal, offset)

    @classmethod
    def coordinate(cls, dim: int, i: int, offset: int = 0):
        """The hyperplane x_i = offset."""
        normal = [0] * dim
        normal[i] = 1
        return cls.new(normal, offset)

    @property
    def dim(self) -> int:
        return len(self.normal)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.normal) if a != 0)

    def homogenize(self) -> "Hyperplane":
        """`a . x = c` becomes `a . x - c z = 0` with z appended as the last coordinate."""
        return Hyperplane.new((*self.normal, -self.offset), 0)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return self.offset, self.normal

    def __str__(self) -> str:
        return f"{self.offset} : " + " ".join(str(a) for a in self.normal)


class Arrangement(ImmutableModel):
    """A finite set of distinct hyperplanes in a common ambient dimension.

    `marker` designates one member, the infinite hyperplane once the arrangement is coned.
    """

    dim: int = Field(..., ge=0, description="Ambient dimension.")
    hyperplanes: frozenset[Hyperplane] = Field(default_factory=frozenset)
    marker: Optional[Hyperplane] = Field(
        None, description="Designated member, the infinite hyperplane after coning."
    )

    @model_validator(mode="after")
    def ensure_consistent_members(self):
        for h in self.hyperplanes:
            if h.dim != self.dim:
                raise ValueError(f"Hyperplane {h} lives in dimension {h.dim}, not {self.dim}")
        if self.marker is not None and self.marker not in self.hyperplanes:
            raise ValueError(f"Marker {self.marker} is not a member of the arrangement")
        return self

    @field_serializer("hyperplanes")
    def serialize_hyperplanes(self, hyperplanes: frozenset[Hyperplane]) -> list[Hyperplane]:
        return sorted(hyperplanes, key=Hyperplane.sort_key)

    @classmethod
    def new(
        cls,
        dim: int,
        hyperplanes: Iterable[Hyperplane] = (),
        marker: Optional[Hyperplane] = None,
    ):
        return cls(dim=dim, hyperplanes=frozenset(hyperplanes), marker=marker)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def sorted_hyperplanes(self) -> list[Hyperplane]:
        return sorted(self.hyperplanes, key=Hyperplane.sort_key)

    @property
    def is_central(self) -> bool:
        return all(h.offset == 0 for h in self.hyperplanes)


__all__ = [
    "Hyperplane",
    "Arrangement",
]
