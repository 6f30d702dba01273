"""
Depth-first search for vertex numberings defined by triple conditions.

A condition on triples {i, j} < k only depends on the apex k (the vertex with
the largest number) and the set of vertices numbered before it, so a partial
numbering is abandoned as soon as its newest vertex fails as an apex.

Numberings compare by `perm` (vertex -> position). The pruned search only
decides existence; the smallest valid `perm` is then found by walking
permutations in lexicographic order.
"""

from itertools import permutations
from typing import Callable, Optional

from .errors import VerificationError
from .objects import VertexOrdering


ApexCheck = Callable[[tuple[int, ...], int], bool]
"""`check(earlier, apex)`: do all triples with apex `apex` and both other vertices in `earlier` pass?"""


def _exists(n: int, apex_ok: ApexCheck) -> bool:
    def extend(prefix: tuple[int, ...], remaining: list[int]) -> bool:
        if not remaining:
            return True
        return any(
            extend(prefix + (vertex,), remaining[:index] + remaining[index + 1 :])
            for index, vertex in enumerate(remaining)
            if len(prefix) < 2 or apex_ok(prefix, vertex)
        )

    return extend((), list(range(n)))


def search_ordering(n: int, apex_ok: ApexCheck) -> Optional[VertexOrdering]:
    """Valid numbering with the lexicographically smallest `perm`, or None."""
    if not _exists(n, apex_ok):
        return None
    for perm in permutations(range(n)):
        ordering = VertexOrdering(perm=perm)
        if check_ordering(n, ordering, apex_ok):
            return ordering
    raise VerificationError("pruned search found a numbering the full scan rejects")


def check_ordering(n: int, ordering: VertexOrdering, apex_ok: ApexCheck) -> bool:
    sequence = ordering.sequence
    return all(apex_ok(sequence[:position], sequence[position]) for position in range(2, n))


__all__ = [
    "ApexCheck",
    "search_ordering",
    "check_ordering",
]
