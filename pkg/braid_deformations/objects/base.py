from typing import Annotated, Sequence

from pydantic import ConfigDict, Field

from pydantic_api.base import BaseModel

from braid_deformations.errors import InputError


class ImmutableModel(BaseModel):
    """Base class for all value objects: frozen, hence hashable and safe to share across threads."""

    model_config = ConfigDict(frozen=True)


VertexLabel = Annotated[int, Field(ge=0, description="0-based vertex label.")]

Arc = tuple[int, int]
"""Ordered pair (i, j): the arrow from i to j."""

Pair = tuple[int, int]
"""Unordered pair {i, j}, stored as (min, max)."""


def normalize_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def check_permutation(mapping: Sequence[int], n: int) -> None:
    if sorted(mapping) != list(range(n)):
        raise InputError(f"{list(mapping)} is not a permutation of 0..{n - 1}")


__all__ = [
    "ImmutableModel",
    "VertexLabel",
    "Arc",
    "Pair",
    "normalize_pair",
    "check_permutation",
]
