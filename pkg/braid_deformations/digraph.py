"""
Operations on digraphs: the triple conditions (A1)/(A2), numbering search,
induced subgraphs, forbidden-pattern detection and exhaustive enumeration.

(A1) for i, j < k: (i, j) in E implies (i, k) in E or (k, j) in E.
(A2) for i, j < k: (i, k) in E and (k, j) in E implies (i, j) in E.
Both are checked for each ordered assignment of the two earlier vertices to (i, j).
"""

from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .errors import InputError
from .objects import (
    Arc,
    Digraph,
    ForbiddenPattern,
    PATTERN_TEMPLATES,
    VertexOrdering,
)
from .ordering import check_ordering, search_ordering

MAX_ENUMERATION_VERTICES = 5


def _triple_ok(edges: frozenset[Arc], i: int, j: int, k: int) -> bool:
    if (i, j) in edges and (i, k) not in edges and (k, j) not in edges:
        return False
    if (i, k) in edges and (k, j) in edges and (i, j) not in edges:
        return False
    return True


def _apex_checker(g: Digraph):
    edges = g.edges

    def apex_ok(earlier: tuple[int, ...], k: int) -> bool:
        return all(_triple_ok(edges, i, j, k) for i, j in permutations(earlier, 2))

    return apex_ok


def satisfies_a1_a2_under(g: Digraph, ordering: VertexOrdering) -> bool:
    if ordering.n != g.n:
        raise InputError(f"Ordering of {ordering.n} vertices does not fit a digraph on {g.n}")
    return check_ordering(g.n, ordering, _apex_checker(g))


def find_a1_a2_ordering(g: Digraph) -> Optional[VertexOrdering]:
    """Numbering with the lexicographically smallest `perm` under which (A1) and (A2) hold, if any."""
    return search_ordering(g.n, _apex_checker(g))


def induced_subgraph(g: Digraph, vertices: Sequence[int]) -> Digraph:
    """Subgraph on `vertices`; vertex `vertices[a]` becomes label a."""
    if not vertices:
        raise InputError("Induced subgraph needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise InputError(f"Duplicate labels in {list(vertices)}")
    for v in vertices:
        if not 0 <= v < g.n:
            raise InputError(f"Label {v} is out of range for n={g.n}")
    index = {v: a for a, v in enumerate(vertices)}
    return Digraph.new(
        len(vertices),
        ((index[i], index[j]) for i, j in g.edges if i in index and j in index),
    )


def find_forbidden_triple(g: Digraph) -> Optional[ForbiddenPattern]:
    """First induced triple whose exact arc set is a relabelled forbidden template.

    Triples are scanned in lexicographic order, relabellings in the order of
    `itertools.permutations`.
    """
    for triple in combinations(range(g.n), 3):
        induced = frozenset(
            (i, j) for i, j in permutations(triple, 2) if (i, j) in g.edges
        )
        for witness in permutations(triple):
            for kind, template in PATTERN_TEMPLATES.items():
                if len(template) != len(induced):
                    continue
                if frozenset((witness[a], witness[b]) for a, b in template) == induced:
                    return ForbiddenPattern(kind=kind, witness=witness)
    return None


def _all_arcs(n: int) -> list[Arc]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def _check_enumeration_cap(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_VERTICES:
        raise InputError(f"Enumeration supports 1 <= n <= {MAX_ENUMERATION_VERTICES}, got n={n}")


def digraph_count(n: int) -> int:
    _check_enumeration_cap(n)
    return 2 ** (n * (n - 1))


def _decode(n: int, arcs: list[Arc], index: int) -> Digraph:
    # arcs come from _all_arcs, already loop-free and in range
    return Digraph.model_construct(
        n=n, edges=frozenset(arc for b, arc in enumerate(arcs) if index >> b & 1)
    )


def digraph_from_index(n: int, index: int) -> Digraph:
    """The digraph whose arc set is encoded by the bits of `index` (bit b = b-th arc in lexicographic order)."""
    total = digraph_count(n)
    if not 0 <= index < total:
        raise InputError(f"Index {index} is out of range [0, {total})")
    return _decode(n, _all_arcs(n), index)


def enumerate_digraphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Digraph]:
    """All digraphs on n labelled vertices, or the slice [start, stop) of the same order."""
    total = digraph_count(n)
    stop = total if stop is None else min(stop, total)
    if start < 0 or start > stop:
        raise InputError(f"Invalid enumeration slice [{start}, {stop})")
    arcs = _all_arcs(n)
    return (_decode(n, arcs, index) for index in range(start, stop))


__all__ = [
    "MAX_ENUMERATION_VERTICES",
    "satisfies_a1_a2_under",
    "find_a1_a2_ordering",
    "induced_subgraph",
    "find_forbidden_triple",
    "digraph_count",
    "digraph_from_index",
    "enumerate_digraphs",
]
