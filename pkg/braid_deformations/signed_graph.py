"""
Signed graphs attached to digraphs.

S(G) keeps the vertex set; a pair joined by both arcs becomes a positive edge,
a pair joined by no arc a negative edge, and a pair joined by exactly one arc
stays neutral. Signed eliminability asks for a numbering such that every
triple {i, j} < k satisfies

(SE1) {k,i} in E_mu and {i,j} in E_nu with {mu, nu} = {+, -} implies {k,j} in E_nu;
(SE2) {k,i} in E_mu and {k,j} in E_mu implies {i,j} in E_mu.
"""

from itertools import permutations, product
from typing import Iterator, Optional

from .errors import InputError
from .objects import (
    Digraph,
    MultiplicityMap,
    SignedGraph,
    VertexOrdering,
)
from .ordering import check_ordering, search_ordering

MAX_SIGNED_ENUMERATION_VERTICES = 4


def sign_map(g: Digraph) -> SignedGraph:
    plus, minus = [], []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            forward, backward = g.has_edge(i, j), g.has_edge(j, i)
            if forward and backward:
                plus.append((i, j))
            elif not forward and not backward:
                minus.append((i, j))
    return SignedGraph.new(g.n, plus=plus, minus=minus)


def _sign_table(sg: SignedGraph) -> list[list[int]]:
    table = [[0] * sg.n for _ in range(sg.n)]
    for sign, pairs in ((1, sg.plus), (-1, sg.minus)):
        for i, j in pairs:
            table[i][j] = table[j][i] = sign
    return table


def _apex_checker(sg: SignedGraph):
    s = _sign_table(sg)

    def apex_ok(earlier: tuple[int, ...], k: int) -> bool:
        for i, j in permutations(earlier, 2):
            ki, ij, kj = s[k][i], s[i][j], s[k][j]
            if ki and ij and ki != ij and kj != ij:
                return False
            if ki and ki == kj and ij != ki:
                return False
        return True

    return apex_ok


def is_signed_eliminable_under(sg: SignedGraph, ordering: VertexOrdering) -> bool:
    if ordering.n != sg.n:
        raise InputError(f"Ordering of {ordering.n} vertices does not fit a signed graph on {sg.n}")
    return check_ordering(sg.n, ordering, _apex_checker(sg))


def find_elimination_ordering(sg: SignedGraph) -> Optional[VertexOrdering]:
    """Signed elimination numbering with the lexicographically smallest `perm`, if any."""
    return search_ordering(sg.n, _apex_checker(sg))


def enumerate_liftings(sg: SignedGraph) -> Iterator[Digraph]:
    """Every digraph G with S(G) = sg: 2 ** (number of neutral pairs) of them."""
    fixed = [arc for i, j in sorted(sg.plus) for arc in ((i, j), (j, i))]
    neutral = sg.neutral_pairs()
    for choice in product((False, True), repeat=len(neutral)):
        arcs = list(fixed)
        for (i, j), reverse in zip(neutral, choice):
            arcs.append((j, i) if reverse else (i, j))
        yield Digraph.new(sg.n, arcs)


def enumerate_signed_graphs(n: int) -> Iterator[SignedGraph]:
    """All 3 ** (n choose 2) signed graphs on n labelled vertices."""
    if not 1 <= n <= MAX_SIGNED_ENUMERATION_VERTICES:
        raise InputError(
            f"Signed graph enumeration supports 1 <= n <= {MAX_SIGNED_ENUMERATION_VERTICES}, got n={n}"
        )
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return (
        SignedGraph.new(
            n,
            plus=(pair for pair, s in zip(pairs, signs) if s == 1),
            minus=(pair for pair, s in zip(pairs, signs) if s == -1),
        )
        for signs in product((1, -1, 0), repeat=len(pairs))
    )


def ziegler_multiplicity(g: Digraph, k: int) -> MultiplicityMap:
    """Number of hyperplanes of the level-k deformation parallel to x_i = x_j, for each pair.

    These translates all restrict to the same hyperplane of the infinite
    hyperplane, so this is the multiplicity of the restriction there:
    2k + 1 + epsilon(i, j) + epsilon(j, i).
    """
    if k < 0:
        raise InputError(f"Level k must be nonnegative, got {k}")
    mult = {
        (i, j): 2 * k + 1 + g.epsilon(i, j) + g.epsilon(j, i)
        for i in range(g.n)
        for j in range(i + 1, g.n)
    }
    return MultiplicityMap(n=g.n, k=k, mult=mult)


__all__ = [
    "MAX_SIGNED_ENUMERATION_VERTICES",
    "sign_map",
    "is_signed_eliminable_under",
    "find_elimination_ordering",
    "enumerate_liftings",
    "enumerate_signed_graphs",
    "ziegler_multiplicity",
]
